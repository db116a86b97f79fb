//! A citable map of implication and separation theorems between large
//! cardinal degree properties.
//!
//! The library is a set of property nodes, optionally parameterized by an
//! ordinal, a degree term, or a pair of ordinals, together with edges that
//! record published theorems: implications, equivalences, forcing
//! separations, and one non-separability result. Every edge carries a
//! citation label and a verbatim quote of the statement it encodes, so
//! query answers can be traced back to their sources.
//!
//! [`seed`] returns the built-in library. [`kb_load`] reads the same JSON
//! schema from a file: top-level arrays `nodes` and `edges`, where a node is
//! `{id, display, family, parameter}` and an edge is `{from, to, kind,
//! citation, quote, flags?}`. Endpoint strings embed parameter patterns,
//! for example `t-inaccessible(t+1)` or `mitchell-sc-rank-geq(th, 1)`.
//!
//! Loading enforces the schema: duplicate ids, unknown node references,
//! malformed patterns and cycles in the implication fragment are rejected
//! outright. Softer editorial rules, such as nonempty quotes and the
//! direction of separation edges, are reported by [`kb_validate`].

mod pattern;
mod query;
mod validate;

pub use pattern::{NodeRef, ParamPattern, ParamValue, Pattern};
pub use query::{
    kb_implies, kb_separations, parse_instance, ImplicationStep, NodeInstance, QueryError,
    SeparationResult,
};
pub use validate::{kb_validate, ValidationReport};

use pattern::{parse_slot, split_slots, SlotKind};
use serde::Deserialize;
use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use thiserror::Error;

/// How a property node is parameterized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParameterKind {
    None,
    Ordinal,
    MetaOrdinal,
    OrdinalPair,
}

/// Thematic grouping of nodes, which also fixes how parameters compare.
/// Within every family except hugeness, a larger parameter is the stronger
/// property: holding at a degree entails holding at every smaller degree,
/// and pair parameters compare in the second component with the first held
/// fixed. Hugeness targets do not compare at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    InaccessibleDegrees,
    MahloDegrees,
    Worldliness,
    Reflection,
    Compactness,
    Measurability,
    Supercompactness,
    Hugeness,
}

impl Family {
    /// Whether parameters of this family compare downward.
    pub fn monotone(self) -> bool {
        !matches!(self, Family::Hugeness)
    }
}

impl fmt::Display for ParameterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParameterKind::None => "none",
            ParameterKind::Ordinal => "ordinal",
            ParameterKind::MetaOrdinal => "meta-ordinal",
            ParameterKind::OrdinalPair => "ordinal-pair",
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::InaccessibleDegrees => "inaccessible-degrees",
            Family::MahloDegrees => "mahlo-degrees",
            Family::Worldliness => "worldliness",
            Family::Reflection => "reflection",
            Family::Compactness => "compactness",
            Family::Measurability => "measurability",
            Family::Supercompactness => "supercompactness",
            Family::Hugeness => "hugeness",
        })
    }
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeKind::Implies => "Implies",
            EdgeKind::Equivalent => "Equivalent",
            EdgeKind::SeparatedByForcing => "SeparatedByForcing",
            EdgeKind::NonSeparable => "NonSeparable",
        })
    }
}

impl fmt::Display for EdgeFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeFlag::AsStated => "as-stated",
            EdgeFlag::OrdinalParametersOnly => "ordinal-parameters-only",
        })
    }
}

/// The assertion an edge makes about its two endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Implies,
    Equivalent,
    /// Some forcing preserves the `from` instance while destroying the
    /// `to` instance.
    SeparatedByForcing,
    /// No forcing can arrange `from` without `to`.
    NonSeparable,
}

/// Editorial qualifiers on an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeFlag {
    /// Recorded exactly as printed even though the statement is doubtful.
    AsStated,
    /// The theorem covers plain ordinal parameters only; matches that bind
    /// a variable to a term mentioning `W` are out of scope.
    OrdinalParametersOnly,
}

/// A named property in the hierarchy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyNode {
    pub id: String,
    pub display: String,
    pub family: Family,
    pub parameter: ParameterKind,
}

/// A single recorded theorem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremEdge {
    pub from: NodeRef,
    pub to: NodeRef,
    pub kind: EdgeKind,
    pub citation: String,
    pub quote: String,
    pub flags: Vec<EdgeFlag>,
}

/// A loaded theorem library.
#[derive(Debug, Clone)]
pub struct KnowledgeBase {
    pub nodes: Vec<PropertyNode>,
    pub edges: Vec<TheoremEdge>,
}

impl KnowledgeBase {
    pub fn node(&self, id: &str) -> Option<&PropertyNode> {
        self.nodes.iter().find(|n| n.id == id)
    }
}

/// Why a knowledge base file was rejected.
#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read knowledge base: {0}")]
    Io(#[from] std::io::Error),
    #[error("knowledge base is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema error at {location}: {message}")]
    Schema { location: String, message: String },
    #[error("{edge} references unknown node `{id}`")]
    DanglingRef { edge: String, id: String },
    #[error("implication cycle through {}", nodes.join(" -> "))]
    Cycle { nodes: Vec<String> },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawKb {
    nodes: Vec<RawNode>,
    edges: Vec<RawEdge>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawNode {
    id: String,
    display: String,
    family: String,
    parameter: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEdge {
    from: String,
    to: String,
    kind: String,
    citation: String,
    quote: String,
    #[serde(default)]
    flags: Vec<String>,
}

fn schema(location: String, message: String) -> LoadError {
    LoadError::Schema { location, message }
}

fn parse_family(s: &str, location: String) -> Result<Family, LoadError> {
    match s {
        "inaccessible-degrees" => Ok(Family::InaccessibleDegrees),
        "mahlo-degrees" => Ok(Family::MahloDegrees),
        "worldliness" => Ok(Family::Worldliness),
        "reflection" => Ok(Family::Reflection),
        "compactness" => Ok(Family::Compactness),
        "measurability" => Ok(Family::Measurability),
        "supercompactness" => Ok(Family::Supercompactness),
        "hugeness" => Ok(Family::Hugeness),
        other => Err(schema(location, format!("unknown family `{other}`"))),
    }
}

fn parse_parameter_kind(s: &str, location: String) -> Result<ParameterKind, LoadError> {
    match s {
        "none" => Ok(ParameterKind::None),
        "ordinal" => Ok(ParameterKind::Ordinal),
        "meta-ordinal" => Ok(ParameterKind::MetaOrdinal),
        "ordinal-pair" => Ok(ParameterKind::OrdinalPair),
        other => Err(schema(location, format!("unknown parameter kind `{other}`"))),
    }
}

fn parse_edge_kind(s: &str, location: String) -> Result<EdgeKind, LoadError> {
    match s {
        "Implies" => Ok(EdgeKind::Implies),
        "Equivalent" => Ok(EdgeKind::Equivalent),
        "SeparatedByForcing" => Ok(EdgeKind::SeparatedByForcing),
        "NonSeparable" => Ok(EdgeKind::NonSeparable),
        other => Err(schema(location, format!("unknown edge kind `{other}`"))),
    }
}

fn parse_flag(s: &str, location: String) -> Result<EdgeFlag, LoadError> {
    match s {
        "as-stated" => Ok(EdgeFlag::AsStated),
        "ordinal-parameters-only" => Ok(EdgeFlag::OrdinalParametersOnly),
        other => Err(schema(location, format!("unknown flag `{other}`"))),
    }
}

fn parse_node_ref(
    text: &str,
    nodes: &[PropertyNode],
    location: String,
) -> Result<NodeRef, LoadError> {
    let t = text.trim();
    let (name, args) = match t.find('(') {
        None => (t, None),
        Some(p) => {
            let rest = &t[p..];
            if !rest.ends_with(')') {
                return Err(schema(location, format!("unbalanced parentheses in `{t}`")));
            }
            (t[..p].trim_end(), Some(&rest[1..rest.len() - 1]))
        }
    };
    let node = nodes.iter().find(|n| n.id == name).ok_or_else(|| LoadError::DanglingRef {
        edge: location.clone(),
        id: name.to_string(),
    })?;
    let slots = args.map(split_slots);
    let pattern = match (node.parameter, slots) {
        (ParameterKind::None, None) => None,
        (ParameterKind::None, Some(_)) => {
            return Err(schema(location, format!("node `{name}` takes no parameter")));
        }
        (_, None) => {
            return Err(schema(location, format!("node `{name}` requires a parameter pattern")));
        }
        (kind, Some(slots)) => {
            let expected = if kind == ParameterKind::OrdinalPair { 2 } else { 1 };
            if slots.len() != expected {
                return Err(schema(
                    location,
                    format!(
                        "node `{name}` takes {expected} parameter slot(s), found {}",
                        slots.len()
                    ),
                ));
            }
            let slot_kind = match kind {
                ParameterKind::MetaOrdinal => SlotKind::Meta,
                _ => SlotKind::Ord,
            };
            let mut parsed = Vec::new();
            for s in &slots {
                parsed.push(parse_slot(s, slot_kind).map_err(|e| schema(location.clone(), e))?);
            }
            if expected == 2 {
                let second = parsed.pop().expect("two slots were parsed");
                let first = parsed.pop().expect("two slots were parsed");
                Some(ParamPattern::Pair(first, second))
            } else {
                Some(ParamPattern::Single(parsed.pop().expect("one slot was parsed")))
            }
        }
    };
    Ok(NodeRef { node: name.to_string(), pattern })
}

/// Parse and check a knowledge base from JSON text.
pub fn kb_from_str(text: &str) -> Result<KnowledgeBase, LoadError> {
    let raw: RawKb = serde_json::from_str(text)?;
    let mut nodes: Vec<PropertyNode> = Vec::with_capacity(raw.nodes.len());
    let mut seen = BTreeSet::new();
    for (i, n) in raw.nodes.iter().enumerate() {
        if !seen.insert(n.id.clone()) {
            return Err(schema(
                format!("nodes[{i}].id"),
                format!("duplicate node id `{}`", n.id),
            ));
        }
        let family = parse_family(&n.family, format!("nodes[{i}].family"))?;
        let parameter = parse_parameter_kind(&n.parameter, format!("nodes[{i}].parameter"))?;
        nodes.push(PropertyNode {
            id: n.id.clone(),
            display: n.display.clone(),
            family,
            parameter,
        });
    }
    let mut edges: Vec<TheoremEdge> = Vec::with_capacity(raw.edges.len());
    for (i, e) in raw.edges.iter().enumerate() {
        let kind = parse_edge_kind(&e.kind, format!("edges[{i}].kind"))?;
        let mut flags = Vec::new();
        for f in &e.flags {
            flags.push(parse_flag(f, format!("edges[{i}].flags"))?);
        }
        let from = parse_node_ref(&e.from, &nodes, format!("edges[{i}].from"))?;
        let to = parse_node_ref(&e.to, &nodes, format!("edges[{i}].to"))?;
        edges.push(TheoremEdge {
            from,
            to,
            kind,
            citation: e.citation.clone(),
            quote: e.quote.clone(),
            flags,
        });
    }
    let kb = KnowledgeBase { nodes, edges };
    if let Some(cycle) = validate::implication_cycle(&kb) {
        return Err(LoadError::Cycle { nodes: cycle });
    }
    Ok(kb)
}

/// Load a knowledge base from a JSON file.
pub fn kb_load(path: impl AsRef<Path>) -> Result<KnowledgeBase, LoadError> {
    kb_from_str(&std::fs::read_to_string(path)?)
}

/// The built-in theorem library.
pub fn seed() -> KnowledgeBase {
    kb_from_str(include_str!("../data/seed.json"))
        .expect("the built-in library satisfies its own schema")
}
