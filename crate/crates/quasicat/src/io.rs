//! JSON documents for simplicial sets, categories, diagrams and monoidal
//! presentations.
//!
//! Simplicial sets are written by their non-degenerate simplices:
//!
//! ```json
//! { "dim": 2,
//!   "simplices": [["a", "b"], ["f"]],
//!   "faces": { "f": ["b", "a"] } }
//! ```
//!
//! A face entry is either an id or a degeneracy expression such as
//! `"s1 s0 a"`. Categories list objects, morphisms, identities and the
//! composition table as `[g, f, g∘f]` triples; composites with an identity
//! may be left out. Monoidal presentations add total `tensor_obj`,
//! `tensor_mor`, `unit`, `associator`, `unitors` and optional `braiding`
//! tables, all keyed by names.

use std::collections::{BTreeMap, HashMap};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::category::{FiniteCategory, Morphism};
use crate::error::{Error, Result};
use crate::monoidal::{BaseMap, MonoidalPresentation};
use crate::sset::normal_form::{from_presentation, to_presentation, NondegeneratePresentation};
use crate::sset::{enumerate_maps_with, FiniteSimplicialSet, SimplicialMap};

fn parse<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn render<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SSetDoc {
    pub dim: usize,
    pub simplices: Vec<Vec<String>>,
    #[serde(default)]
    pub faces: BTreeMap<String, Vec<String>>,
}

impl SSetDoc {
    pub fn build(&self) -> Result<FiniteSimplicialSet> {
        from_presentation(&NondegeneratePresentation {
            dim: self.dim,
            simplices: self.simplices.clone(),
            faces: self.faces.clone(),
        })
    }

    pub fn of(x: &FiniteSimplicialSet) -> Self {
        let p = to_presentation(x);
        SSetDoc { dim: p.dim, simplices: p.simplices, faces: p.faces }
    }
}

pub fn parse_sset(text: &str) -> Result<FiniteSimplicialSet> {
    parse::<SSetDoc>(text)?.build()
}

pub fn render_sset(x: &FiniteSimplicialSet) -> String {
    render(&SSetDoc::of(x))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismDoc {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryDoc {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDoc>,
    /// Object name to identity morphism name.
    pub identities: BTreeMap<String, String>,
    #[serde(default)]
    pub compose: Vec<[String; 3]>,
}

struct Names<'a> {
    objects: HashMap<&'a str, usize>,
    morphisms: HashMap<&'a str, usize>,
}

impl<'a> Names<'a> {
    fn new(objects: &'a [String], morphisms: impl Iterator<Item = &'a str>) -> Result<Self> {
        let mut o = HashMap::new();
        for (i, n) in objects.iter().enumerate() {
            if o.insert(n.as_str(), i).is_some() {
                return Err(Error::Parse(format!("duplicate object `{n}`")));
            }
        }
        let mut m = HashMap::new();
        for (i, n) in morphisms.enumerate() {
            if m.insert(n, i).is_some() {
                return Err(Error::Parse(format!("duplicate morphism `{n}`")));
            }
        }
        Ok(Names { objects: o, morphisms: m })
    }

    fn obj(&self, n: &str) -> Result<usize> {
        self.objects.get(n).copied().ok_or_else(|| Error::Parse(format!("unknown object `{n}`")))
    }

    fn mor(&self, n: &str) -> Result<usize> {
        self.morphisms.get(n).copied().ok_or_else(|| Error::Parse(format!("unknown morphism `{n}`")))
    }
}

impl CategoryDoc {
    pub fn build(&self) -> Result<FiniteCategory> {
        let names = Names::new(&self.objects, self.morphisms.iter().map(|m| m.name.as_str()))?;
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| Ok(Morphism { name: m.name.clone(), src: names.obj(&m.src)?, tgt: names.obj(&m.tgt)? }))
            .collect::<Result<Vec<_>>>()?;
        let identities = self
            .objects
            .iter()
            .map(|o| {
                let id = self.identities.get(o).ok_or_else(|| Error::Parse(format!("no identity for `{o}`")))?;
                names.mor(id)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut table = HashMap::new();
        for [g, f, h] in &self.compose {
            let key = (names.mor(g)?, names.mor(f)?);
            if table.insert(key, names.mor(h)?).is_some() {
                return Err(Error::Parse(format!("composite {g} ∘ {f} listed twice")));
            }
        }
        let is_id = |f: usize| identities.contains(&f);
        FiniteCategory::new(self.objects.clone(), morphisms, identities.clone(), |g, f| {
            table.get(&(g, f)).copied().or(if is_id(g) { Some(f) } else if is_id(f) { Some(g) } else { None })
        })
        .map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn of(c: &FiniteCategory) -> Self {
        let obj = |x: usize| c.objects[x].clone();
        let nm = c.num_morphisms();
        let mut compose = Vec::new();
        for g in 0..nm {
            for f in 0..nm {
                if c.identities.contains(&g) || c.identities.contains(&f) {
                    continue;
                }
                if let Some(h) = c.compose(g, f) {
                    compose.push([c.name(g).to_string(), c.name(f).to_string(), c.name(h).to_string()]);
                }
            }
        }
        CategoryDoc {
            objects: c.objects.clone(),
            morphisms: c
                .morphisms
                .iter()
                .map(|m| MorphismDoc { name: m.name.clone(), src: obj(m.src), tgt: obj(m.tgt) })
                .collect(),
            identities: (0..c.num_objects()).map(|x| (obj(x), c.name(c.id(x)).to_string())).collect(),
            compose,
        }
    }
}

pub fn parse_category(text: &str) -> Result<FiniteCategory> {
    parse::<CategoryDoc>(text)?.build()
}

pub fn render_category(c: &FiniteCategory) -> String {
    render(&CategoryDoc::of(c))
}

type Table2 = BTreeMap<String, BTreeMap<String, String>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitorsDoc {
    pub left: BTreeMap<String, String>,
    pub right: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidalDoc {
    #[serde(flatten)]
    pub category: CategoryDoc,
    pub tensor_obj: Table2,
    pub tensor_mor: Table2,
    pub unit: String,
    /// `[a, b, c, α_{a,b,c}]`.
    pub associator: Vec<[String; 4]>,
    pub unitors: UnitorsDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braiding: Option<Table2>,
}

fn lookup2<'a>(t: &'a Table2, what: &str, a: &str, b: &str) -> Result<&'a str> {
    t.get(a)
        .and_then(|r| r.get(b))
        .map(String::as_str)
        .ok_or_else(|| Error::Parse(format!("{what} table has no entry for ({a}, {b})")))
}

fn lookup1<'a>(t: &'a BTreeMap<String, String>, what: &str, a: &str) -> Result<&'a str> {
    t.get(a).map(String::as_str).ok_or_else(|| Error::Parse(format!("{what} table has no entry for {a}")))
}

impl MonoidalDoc {
    pub fn build(&self) -> Result<MonoidalPresentation> {
        let base = self.category.build()?;
        let names = Names::new(&base.objects, base.morphisms.iter().map(|m| m.name.as_str()))?;
        let obs = &base.objects;
        let mors: Vec<&str> = base.morphisms.iter().map(|m| m.name.as_str()).collect();
        let tensor_obj = obs
            .iter()
            .map(|a| obs.iter().map(|b| names.obj(lookup2(&self.tensor_obj, "tensor_obj", a, b)?)).collect())
            .collect::<Result<Vec<Vec<usize>>>>()?;
        let tensor_mor = mors
            .iter()
            .map(|f| mors.iter().map(|g| names.mor(lookup2(&self.tensor_mor, "tensor_mor", f, g)?)).collect())
            .collect::<Result<Vec<Vec<usize>>>>()?;
        let n = obs.len();
        let mut associator = vec![None; n * n * n];
        for [a, b, c, f] in &self.associator {
            let k = (names.obj(a)? * n + names.obj(b)?) * n + names.obj(c)?;
            if associator[k].replace(names.mor(f)?).is_some() {
                return Err(Error::Parse(format!("associator ({a}, {b}, {c}) listed twice")));
            }
        }
        let associator = associator
            .into_iter()
            .enumerate()
            .map(|(k, f)| {
                f.ok_or_else(|| {
                    let (a, b, c) = (k / (n * n), (k / n) % n, k % n);
                    Error::Parse(format!("associator table has no entry for ({}, {}, {})", obs[a], obs[b], obs[c]))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let unitor = |t: &BTreeMap<String, String>, what: &str| {
            obs.iter().map(|a| names.mor(lookup1(t, what, a)?)).collect::<Result<Vec<_>>>()
        };
        let braiding = match &self.braiding {
            None => None,
            Some(t) => Some(
                obs.iter()
                    .map(|a| obs.iter().map(|b| names.mor(lookup2(t, "braiding", a, b)?)).collect())
                    .collect::<Result<Vec<Vec<usize>>>>()?,
            ),
        };
        let m = MonoidalPresentation {
            tensor_obj,
            tensor_mor,
            unit: names.obj(&self.unit)?,
            associator,
            left_unitor: unitor(&self.unitors.left, "left unitor")?,
            right_unitor: unitor(&self.unitors.right, "right unitor")?,
            braiding,
            base,
        };
        m.check_shapes()?;
        Ok(m)
    }

    pub fn of(m: &MonoidalPresentation) -> Self {
        let c = &m.base;
        let on = |x: usize| c.objects[x].clone();
        let mn = |f: usize| c.name(f).to_string();
        let n = m.num_objects();
        let nm = c.num_morphisms();
        let table = |rows: usize, name: &dyn Fn(usize) -> String, val: &dyn Fn(usize, usize) -> String| -> Table2 {
            (0..rows).map(|a| (name(a), (0..rows).map(|b| (name(b), val(a, b))).collect())).collect()
        };
        let mut associator = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for cc in 0..n {
                    associator.push([on(a), on(b), on(cc), mn(m.assoc(a, b, cc))]);
                }
            }
        }
        MonoidalDoc {
            category: CategoryDoc::of(c),
            tensor_obj: table(n, &on, &|a, b| on(m.tensor_obj[a][b])),
            tensor_mor: table(nm, &mn, &|f, g| mn(m.tensor_mor[f][g])),
            unit: on(m.unit),
            associator,
            unitors: UnitorsDoc {
                left: (0..n).map(|a| (on(a), mn(m.left_unitor[a]))).collect(),
                right: (0..n).map(|a| (on(a), mn(m.right_unitor[a]))).collect(),
            },
            braiding: m.braiding.as_ref().map(|s| table(n, &on, &|a, b| mn(s[a][b]))),
        }
    }
}

pub fn parse_monoidal(text: &str) -> Result<MonoidalPresentation> {
    parse::<MonoidalDoc>(text)?.build()
}

pub fn render_monoidal(m: &MonoidalPresentation) -> String {
    render(&MonoidalDoc::of(m))
}

/// A diagram `p: M -> C`. Without a shape the diagram is empty; `map`
/// sends every non-degenerate simplex of the shape to a simplex of `C`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramDoc {
    #[serde(default)]
    pub shape: Option<SSetDoc>,
    #[serde(default)]
    pub map: BTreeMap<String, String>,
}

impl DiagramDoc {
    /// Shape and map at truncation `trunc`, which must not exceed that of `c`.
    pub fn build(&self, c: &FiniteSimplicialSet, trunc: usize) -> Result<(FiniteSimplicialSet, SimplicialMap)> {
        let Some(shape) = &self.shape else {
            if !self.map.is_empty() {
                return Err(Error::Parse("diagram map given without a shape".into()));
            }
            return Ok(crate::join_slice::empty_diagram(trunc));
        };
        let doc = SSetDoc { dim: trunc, ..shape.clone() };
        let m = doc.build()?;
        let mut fixed: Vec<Vec<Option<usize>>> = (0..=trunc).map(|n| vec![None; m.level_size(n)]).collect();
        for n in 0..=trunc {
            for s in m.nondegenerate(n) {
                let name = m.name(n, s);
                let target = self.map.get(name).ok_or_else(|| Error::Parse(format!("diagram does not map `{name}`")))?;
                let t = c
                    .index_of(n, target)
                    .ok_or_else(|| Error::Parse(format!("`{target}` is not a {n}-simplex of the base")))?;
                fixed[n][s] = Some(t);
            }
        }
        let maps = enumerate_maps_with(&m, c, trunc, Some(&fixed), &Budget::unlimited())?;
        match maps.into_iter().next() {
            Some(p) => Ok((m, p)),
            None => Err(Error::Invalid("diagram assignment does not commute with faces".into())),
        }
    }
}

pub fn parse_diagram(text: &str) -> Result<DiagramDoc> {
    parse(text)
}

/// `"(1,*,2)"`-style rendering of a pointed map, one entry per non-base point.
pub fn render_fin_values(a: &BaseMap) -> String {
    match a {
        BaseMap::Fin { values, .. } => {
            let parts: Vec<String> = values.iter().map(|v| v.map_or("*".into(), |x| x.to_string())).collect();
            format!("[{}]", parts.join(","))
        }
        BaseMap::Delta { values, .. } => format!("{values:?}"),
    }
}

/// Inverse of [`render_fin_values`] for a codomain `⟨k⟩_*`.
pub fn parse_fin_values(k: usize, text: &str) -> Result<BaseMap> {
    let body = text.trim().trim_start_matches('[').trim_end_matches(']');
    let values = body
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| match s {
            "*" => Ok(None),
            _ => s.parse::<usize>().map(Some).map_err(|_| Error::Parse(format!("bad Fin value `{s}`"))),
        })
        .collect::<Result<Vec<_>>>()?;
    BaseMap::fin(k, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::nerve;
    use crate::monoidal::samples;
    use crate::sset::{find_isomorphism, horn, standard_simplex};

    #[test]
    fn sset_round_trip() {
        for x in [standard_simplex(2, 3), horn(2, 1, 2), nerve(&FiniteCategory::cyclic_group(2), 3)] {
            let y = parse_sset(&render_sset(&x)).unwrap();
            assert_eq!(x.level_sizes(), y.level_sizes());
            assert!(find_isomorphism(&x, &y).is_some());
        }
    }

    #[test]
    fn handwritten_edge() {
        let text = r#"{"dim": 2, "simplices": [["a","b"],["f"]], "faces": {"f": ["b","a"]}}"#;
        let x = parse_sset(text).unwrap();
        assert_eq!(x.level_sizes(), vec![2, 3, 4]);
        assert!(matches!(parse_sset("{\"dim\": 1"), Err(Error::Parse(_))));
    }

    #[test]
    fn category_round_trip() {
        for c in [FiniteCategory::ordinal(2), FiniteCategory::symmetric_group_3(), FiniteCategory::parallel_pair()] {
            assert_eq!(parse_category(&render_category(&c)).unwrap(), c);
        }
        let missing = r#"{"objects":["x"],"morphisms":[{"name":"1","src":"x","tgt":"x"},{"name":"e","src":"x","tgt":"x"}],
            "identities":{"x":"1"}}"#;
        assert!(matches!(parse_category(missing), Err(Error::Parse(_))));
    }

    #[test]
    fn monoidal_round_trip() {
        for (_, m) in samples::corpus() {
            assert_eq!(parse_monoidal(&render_monoidal(&m)).unwrap(), m);
        }
    }

    #[test]
    fn partial_tables_are_rejected() {
        let mut doc = MonoidalDoc::of(&samples::signed(false));
        doc.tensor_obj.get_mut("1").unwrap().remove("0");
        let err = doc.build().unwrap_err();
        assert!(err.to_string().contains("tensor_obj"), "{err}");
        let mut doc = MonoidalDoc::of(&samples::signed(false));
        doc.associator.pop();
        assert!(matches!(doc.build(), Err(Error::Parse(_))));
    }

    #[test]
    fn fin_values() {
        let a = parse_fin_values(2, "[1,*,2]").unwrap();
        assert_eq!(a, BaseMap::Fin { k: 2, values: vec![Some(1), None, Some(2)] });
        assert_eq!(render_fin_values(&a), "[1,*,2]");
        assert!(parse_fin_values(1, "[2]").is_err());
        assert!(parse_fin_values(1, "[x]").is_err());
    }

    #[test]
    fn diagrams() {
        let c = nerve(&FiniteCategory::ordinal(1), 3);
        let empty = DiagramDoc::default().build(&c, 2).unwrap();
        assert!(empty.0.is_empty());
        let shape = SSetDoc::of(&standard_simplex(0, 0));
        let v = shape.simplices[0][0].clone();
        let target = c.name(0, 1).to_string();
        let doc = DiagramDoc { shape: Some(shape), map: [(v, target)].into() };
        let (m, p) = doc.build(&c, 2).unwrap();
        assert_eq!(m.level_sizes(), vec![1, 1, 1]);
        assert_eq!(p.apply(0, 0), 1);
    }
}
