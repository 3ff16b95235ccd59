//! Writes the JSON inputs under `examples/data/` used by the CLI walkthrough
//! and the integration tests.

use std::fs;
use std::path::Path;

use quasicat::category::{nerve, FiniteCategory};
use quasicat::io::{render_monoidal, render_sset, DiagramDoc, SSetDoc};
use quasicat::monoidal::samples;
use quasicat::sset::{horn, standard_simplex};

fn diagram(shape: &[&str], map: &[(&str, &str)]) -> String {
    let doc = DiagramDoc {
        shape: Some(SSetDoc { dim: 0, simplices: vec![shape.iter().map(|s| s.to_string()).collect()], faces: Default::default() }),
        map: map.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
    };
    serde_json::to_string_pretty(&doc).unwrap() + "\n"
}

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    fs::create_dir_all(&dir).unwrap();
    let diamond = FiniteCategory::poset(&["bot", "a", "b", "top"], |x, y| x == y || x == 0 || y == 3);
    let files: Vec<(&str, String)> = vec![
        ("point.json", render_sset(&standard_simplex(0, 3))),
        ("delta1.json", render_sset(&standard_simplex(1, 3))),
        ("horn21.json", render_sset(&horn(2, 1, 3))),
        ("nerve_ord2.json", render_sset(&nerve(&FiniteCategory::ordinal(2), 3))),
        ("nerve_c2.json", render_sset(&nerve(&FiniteCategory::cyclic_group(2), 3))),
        ("diamond.json", render_sset(&nerve(&diamond, 5))),
        (
            "malformed.json",
            "{ \"dim\": 1,\n  \"simplices\": [[\"a\", \"b\"], [\"f\"]],\n  \"faces\": { \"f\": [\"b\", \"c\"] } }\n".into(),
        ),
        ("diagram_pair.json", diagram(&["u", "v"], &[("u", "a"), ("v", "b")])),
        ("diagram_top.json", diagram(&["x"], &[("x", "top")])),
        ("diagram_empty.json", "{}\n".into()),
        ("signed_twisted.json", render_monoidal(&samples::signed(true))),
        ("corrupted_pentagon.json", render_monoidal(&samples::signed(true).with_associator(0, 1, 1, 1))),
        ("super_signed.json", render_monoidal(&samples::super_signed())),
        ("max_poset.json", render_monoidal(&samples::max_poset())),
    ];
    for (name, text) in files {
        fs::write(dir.join(name), text).unwrap();
        println!("wrote examples/data/{name}");
    }
}
