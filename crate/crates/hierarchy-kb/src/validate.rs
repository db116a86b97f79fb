//! Editorial checks over a loaded library.

use crate::pattern::{pattern_vars, NodeRef, ParamPattern, Pattern, SlotKind};
use crate::query::kb_implies;
use crate::{EdgeFlag, EdgeKind, KnowledgeBase, ParameterKind};
use metaordinal::MetaOrdinal;
use ordinal::Ordinal;
use std::collections::BTreeMap;
use std::fmt;

/// Outcome of [`kb_validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    /// Human-readable rule violations; empty for a sound library.
    pub violations: Vec<String>,
    /// Nontrivial classes of the equivalence relation generated by
    /// `Equivalent` edges. Each class is sorted; classes are listed by
    /// their first member.
    pub equivalence_classes: Vec<Vec<String>>,
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

fn equivalence_roots(kb: &KnowledgeBase) -> (BTreeMap<&str, usize>, Vec<usize>) {
    let index: BTreeMap<&str, usize> = kb
        .nodes
        .iter()
        .enumerate()
        .map(|(i, n)| (n.id.as_str(), i))
        .collect();
    let mut parent: Vec<usize> = (0..kb.nodes.len()).collect();
    for e in &kb.edges {
        if e.kind != EdgeKind::Equivalent {
            continue;
        }
        let (Some(&a), Some(&b)) = (index.get(e.from.node.as_str()), index.get(e.to.node.as_str()))
        else {
            continue;
        };
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    (index, parent)
}

/// A cycle among the equivalence classes of the implication fragment, if
/// one exists, reported by one representative node id per class.
pub(crate) fn implication_cycle(kb: &KnowledgeBase) -> Option<Vec<String>> {
    let (index, mut parent) = equivalence_roots(kb);
    let n = kb.nodes.len();
    let mut adj = vec![Vec::new(); n];
    for e in &kb.edges {
        if e.kind != EdgeKind::Implies {
            continue;
        }
        let (Some(&a), Some(&b)) = (index.get(e.from.node.as_str()), index.get(e.to.node.as_str()))
        else {
            continue;
        };
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb && !adj[ra].contains(&rb) {
            adj[ra].push(rb);
        }
    }

    fn dfs(
        u: usize,
        adj: &[Vec<usize>],
        color: &mut [u8],
        stack: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        color[u] = 1;
        stack.push(u);
        for &v in &adj[u] {
            match color[v] {
                0 => {
                    if let Some(cycle) = dfs(v, adj, color, stack) {
                        return Some(cycle);
                    }
                }
                1 => {
                    let start = stack.iter().position(|&x| x == v).expect("gray is on stack");
                    let mut cycle = stack[start..].to_vec();
                    cycle.push(v);
                    return Some(cycle);
                }
                _ => {}
            }
        }
        stack.pop();
        color[u] = 2;
        None
    }

    let mut color = vec![0u8; n];
    let mut stack = Vec::new();
    for u in 0..n {
        if color[u] == 0 {
            if let Some(cycle) = dfs(u, &adj, &mut color, &mut stack) {
                return Some(cycle.into_iter().map(|i| kb.nodes[i].id.clone()).collect());
            }
        }
    }
    None
}

fn equivalence_classes(kb: &KnowledgeBase) -> Vec<Vec<String>> {
    let (_, mut parent) = equivalence_roots(kb);
    let mut groups: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for i in 0..kb.nodes.len() {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(kb.nodes[i].id.clone());
    }
    let mut classes: Vec<Vec<String>> = groups
        .into_values()
        .filter(|class| class.len() >= 2)
        .map(|mut class| {
            class.sort();
            class
        })
        .collect();
    classes.sort();
    classes
}

/// A sample value standing in for a pattern variable during the
/// separation direction check.
enum Sample {
    Ord(Ordinal),
    Meta(MetaOrdinal),
}

impl Sample {
    fn succ(&self) -> Sample {
        match self {
            Sample::Ord(o) => Sample::Ord(o.succ()),
            Sample::Meta(m) => Sample::Meta(m.succ()),
        }
    }
}

impl fmt::Display for Sample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sample::Ord(o) => write!(f, "{o}"),
            Sample::Meta(m) => write!(f, "{m}"),
        }
    }
}

fn ref_slots<'a>(kb: &KnowledgeBase, r: &'a NodeRef) -> Vec<(&'a Pattern, SlotKind)> {
    let kind = match kb.node(&r.node) {
        Some(n) if n.parameter == ParameterKind::MetaOrdinal => SlotKind::Meta,
        _ => SlotKind::Ord,
    };
    match &r.pattern {
        None => Vec::new(),
        Some(ParamPattern::Single(p)) => vec![(p, kind)],
        Some(ParamPattern::Pair(p, q)) => vec![(p, kind), (q, kind)],
    }
}

fn assign_samples(
    kb: &KnowledgeBase,
    edge: &crate::TheoremEdge,
) -> BTreeMap<String, Sample> {
    // A degree past every literal in the library, so the sample lies on
    // the generic part of the ladder. Edges restricted to plain ordinal
    // parameters get a plain ordinal stand-in.
    let ordinal_only = edge.flags.contains(&EdgeFlag::OrdinalParametersOnly);
    let mut env = BTreeMap::new();
    for r in [&edge.from, &edge.to] {
        for (p, kind) in ref_slots(kb, r) {
            let (Pattern::Var(x) | Pattern::SuccOf(x)) = p else { continue };
            if env.contains_key(x) {
                continue;
            }
            let sample = match kind {
                SlotKind::Ord => Sample::Ord(Ordinal::from_nat(5)),
                SlotKind::Meta if ordinal_only => {
                    Sample::Meta(MetaOrdinal::from_ordinal(Ordinal::from_nat(5)))
                }
                SlotKind::Meta => Sample::Meta(
                    MetaOrdinal::omega_term(Ordinal::one(), Ordinal::one())
                        .add(&MetaOrdinal::from_ordinal(Ordinal::from_nat(5))),
                ),
            };
            env.insert(x.clone(), sample);
        }
    }
    env
}

fn instantiate_ref(
    kb: &KnowledgeBase,
    r: &NodeRef,
    env: &BTreeMap<String, Sample>,
) -> Option<String> {
    let slot = |p: &Pattern| match p {
        Pattern::OrdLit(o) => Some(o.to_string()),
        Pattern::MetaLit(m) => Some(m.to_string()),
        Pattern::Var(x) => env.get(x).map(Sample::to_string),
        Pattern::SuccOf(x) => env.get(x).map(|s| s.succ().to_string()),
    };
    let rendered: Option<Vec<String>> = ref_slots(kb, r).iter().map(|(p, _)| slot(p)).collect();
    let slots = rendered?;
    if slots.is_empty() {
        Some(r.node.clone())
    } else {
        Some(format!("{}({})", r.node, slots.join(", ")))
    }
}

/// Check the editorial rules: every edge quotes its source, the
/// implication fragment is acyclic, and each separation runs against the
/// grain of implication, meaning the preserved side must not already
/// imply the destroyed side when both are instantiated at sample
/// parameters. The report also lists the nontrivial equivalence classes.
pub fn kb_validate(kb: &KnowledgeBase) -> ValidationReport {
    let mut violations = Vec::new();
    for (i, e) in kb.edges.iter().enumerate() {
        if e.quote.trim().is_empty() {
            violations.push(format!("edges[{i}] `{}`: empty quote", e.citation));
        }
    }
    if let Some(cycle) = implication_cycle(kb) {
        violations.push(format!("implication cycle through {}", cycle.join(" -> ")));
    }
    for (i, e) in kb.edges.iter().enumerate() {
        if !matches!(e.kind, EdgeKind::SeparatedByForcing | EdgeKind::NonSeparable) {
            continue;
        }
        let from_vars = pattern_vars(&e.from.pattern);
        let to_vars = pattern_vars(&e.to.pattern);
        if let Some(unbound) = to_vars.difference(&from_vars).next() {
            violations.push(format!(
                "edges[{i}] `{}`: target pattern mentions unbound variable `{unbound}`",
                e.citation
            ));
            continue;
        }
        let env = assign_samples(kb, e);
        let (Some(preserved), Some(destroyed)) =
            (instantiate_ref(kb, &e.from, &env), instantiate_ref(kb, &e.to, &env))
        else {
            continue;
        };
        match kb_implies(kb, &preserved, &destroyed) {
            Ok(Some(_)) => violations.push(format!(
                "edges[{i}] `{}`: the preserved side `{preserved}` already implies the destroyed side `{destroyed}`",
                e.citation
            )),
            Ok(None) => {}
            Err(err) => violations.push(format!(
                "edges[{i}] `{}`: direction check failed: {err}",
                e.citation
            )),
        }
    }
    ValidationReport { violations, equivalence_classes: equivalence_classes(kb) }
}
