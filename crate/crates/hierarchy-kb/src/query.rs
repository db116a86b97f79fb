//! Queries over a loaded library: derived implications with citation
//! paths, and lookups of recorded separations.

use crate::pattern::{
    self, meta_as_ordinal, split_slots, Binding, Bindings, ParamPattern, ParamValue, Pattern,
};
use crate::{EdgeFlag, EdgeKind, KnowledgeBase, ParameterKind};
use metaordinal::MetaOrdinal;
use ordinal::Ordinal;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

/// Upper bound on explored states. Past this, a query over a pathological
/// library reports [`QueryError::SearchBudget`] instead of spinning, which
/// can happen when successor patterns generate unbounded parameter chains.
const SEARCH_BUDGET: usize = 50_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QueryError {
    #[error("unknown property node `{0}`")]
    UnknownNode(String),
    #[error("bad parameter for `{node}`: {message}")]
    BadParameter { node: String, message: String },
    #[error("implication search exceeded {0} states")]
    SearchBudget(usize),
}

/// A concrete property instance, such as `mahlo` or `t-inaccessible(W^2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeInstance {
    pub node: String,
    pub param: Option<ParamValue>,
}

impl fmt::Display for NodeInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.param {
            None => write!(f, "{}", self.node),
            Some(v) => write!(f, "{}({v})", self.node),
        }
    }
}

/// One link in a derived implication path. The `from` and `to` fields of
/// every step render full instances, so consecutive steps chain exactly; a
/// `*` slot stands for a universally quantified parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ImplicationStep {
    /// A library edge applied at an instance.
    Edge {
        citation: String,
        quote: String,
        from: String,
        to: String,
    },
    /// Parameter weakening inside one node, from a stronger degree (or a
    /// universal one) down to a weaker one.
    Weaken { from: String, to: String },
}

impl ImplicationStep {
    pub fn from_instance(&self) -> &str {
        match self {
            ImplicationStep::Edge { from, .. } | ImplicationStep::Weaken { from, .. } => from,
        }
    }

    pub fn to_instance(&self) -> &str {
        match self {
            ImplicationStep::Edge { to, .. } | ImplicationStep::Weaken { to, .. } => to,
        }
    }
}

/// A separation or non-separability record matching a query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationResult {
    pub kind: EdgeKind,
    pub citation: String,
    pub quote: String,
    pub flags: Vec<EdgeFlag>,
}

/// Parse an instance string such as `t-inaccessible(W+1)` or
/// `mitchell-sc-rank-geq(phi(1,0), 2)` against the library's nodes.
pub fn parse_instance(kb: &KnowledgeBase, text: &str) -> Result<NodeInstance, QueryError> {
    let t = text.trim();
    let (name, args) = match t.find('(') {
        None => (t, None),
        Some(p) => {
            let rest = &t[p..];
            if !rest.ends_with(')') {
                return Err(QueryError::BadParameter {
                    node: t.to_string(),
                    message: "unbalanced parentheses".to_string(),
                });
            }
            (t[..p].trim_end(), Some(&rest[1..rest.len() - 1]))
        }
    };
    let node = kb
        .node(name)
        .ok_or_else(|| QueryError::UnknownNode(name.to_string()))?;
    let bad = |message: String| QueryError::BadParameter { node: name.to_string(), message };
    let slots = args.map(split_slots);
    let param = match (node.parameter, slots) {
        (ParameterKind::None, None) => None,
        (ParameterKind::None, Some(_)) => return Err(bad("takes no parameter".to_string())),
        (_, None) => return Err(bad("requires a parameter".to_string())),
        (ParameterKind::Ordinal, Some(slots)) => {
            let [slot] = slots.as_slice() else {
                return Err(bad(format!("takes one ordinal, found {} slots", slots.len())));
            };
            Some(ParamValue::Ord(parse_ord(slot, &bad)?))
        }
        (ParameterKind::MetaOrdinal, Some(slots)) => {
            let [slot] = slots.as_slice() else {
                return Err(bad(format!("takes one degree term, found {} slots", slots.len())));
            };
            let m = slot
                .trim()
                .parse::<MetaOrdinal>()
                .map_err(|e| bad(format!("`{}`: {e}", slot.trim())))?;
            Some(ParamValue::Meta(m))
        }
        (ParameterKind::OrdinalPair, Some(slots)) => {
            let [first, second] = slots.as_slice() else {
                return Err(bad(format!("takes an ordinal pair, found {} slots", slots.len())));
            };
            Some(ParamValue::Pair(parse_ord(first, &bad)?, parse_ord(second, &bad)?))
        }
    };
    Ok(NodeInstance { node: name.to_string(), param })
}

fn parse_ord(slot: &str, bad: &impl Fn(String) -> QueryError) -> Result<Ordinal, QueryError> {
    slot.trim()
        .parse::<Ordinal>()
        .map_err(|e| bad(format!("`{}`: {e}", slot.trim())))
}

/// One component of a pair-valued search state.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Comp {
    Any,
    Val(Ordinal),
}

/// The parameter part of a search state. `Any` records that the property
/// holds for every parameter value at once, which is how a universally
/// quantified conclusion is carried through the search.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum StateParam {
    Absent,
    Any,
    Ord(Ordinal),
    Meta(MetaOrdinal),
    Pair(Comp, Comp),
}

impl StateParam {
    fn from_value(v: Option<&ParamValue>) -> StateParam {
        match v {
            None => StateParam::Absent,
            Some(ParamValue::Ord(o)) => StateParam::Ord(o.clone()),
            Some(ParamValue::Meta(m)) => StateParam::Meta(m.clone()),
            Some(ParamValue::Pair(a, b)) => {
                StateParam::Pair(Comp::Val(a.clone()), Comp::Val(b.clone()))
            }
        }
    }
}

fn render_comp(c: &Comp) -> String {
    match c {
        Comp::Any => "*".to_string(),
        Comp::Val(o) => o.to_string(),
    }
}

fn render_state(kb: &KnowledgeBase, node: usize, sp: &StateParam) -> String {
    let id = &kb.nodes[node].id;
    match sp {
        StateParam::Absent => id.clone(),
        StateParam::Any => format!("{id}(*)"),
        StateParam::Ord(o) => format!("{id}({o})"),
        StateParam::Meta(m) => format!("{id}({m})"),
        StateParam::Pair(a, b) => format!("{id}({}, {})", render_comp(a), render_comp(b)),
    }
}

/// Match an edge's source pattern against a search state.
fn unify_state(pattern: &Option<ParamPattern>, sp: &StateParam, env: &mut Bindings) -> bool {
    fn slot_any(p: &Pattern, env: &mut Bindings) -> bool {
        match p {
            Pattern::OrdLit(_) | Pattern::MetaLit(_) => true,
            // The state holds at every value, in particular wherever the
            // variable lands, so the variable stays universal.
            Pattern::Var(x) | Pattern::SuccOf(x) => pattern::bind(env, x, Binding::Top),
        }
    }
    match (pattern, sp) {
        (None, StateParam::Absent) => true,
        (Some(ParamPattern::Single(p)), StateParam::Ord(o)) => pattern::unify_ord(p, o, env),
        (Some(ParamPattern::Single(p)), StateParam::Meta(m)) => pattern::unify_meta(p, m, env),
        (Some(ParamPattern::Single(p)), StateParam::Any) => slot_any(p, env),
        (Some(ParamPattern::Pair(p, q)), StateParam::Pair(a, b)) => {
            let comp = |pat: &Pattern, c: &Comp, env: &mut Bindings| match c {
                Comp::Any => slot_any(pat, env),
                Comp::Val(v) => pattern::unify_ord(pat, v, env),
            };
            comp(p, a, env) && comp(q, b, env)
        }
        _ => false,
    }
}

/// Instantiate an edge's target pattern under the bindings collected from
/// its source. Returns `None` when the target is not expressible, for
/// example the successor of a universally quantified variable.
fn substitute(
    pattern: &Option<ParamPattern>,
    env: &Bindings,
    target: ParameterKind,
) -> Option<StateParam> {
    fn as_ord(b: &Binding) -> Option<Option<Ordinal>> {
        match b {
            Binding::Top => Some(None),
            Binding::Ord(o) => Some(Some(o.clone())),
            Binding::Meta(m) => meta_as_ordinal(m).map(Some),
        }
    }
    // An unbound variable means the conclusion holds for every value.
    fn ord_slot(p: &Pattern, env: &Bindings) -> Option<Comp> {
        match p {
            Pattern::OrdLit(c) => Some(Comp::Val(c.clone())),
            Pattern::MetaLit(c) => meta_as_ordinal(c).map(Comp::Val),
            Pattern::Var(x) => match env.get(x) {
                None => Some(Comp::Any),
                Some(b) => as_ord(b).map(|v| v.map_or(Comp::Any, Comp::Val)),
            },
            Pattern::SuccOf(x) => match env.get(x).and_then(as_ord) {
                Some(Some(o)) => Some(Comp::Val(o.succ())),
                _ => None,
            },
        }
    }
    fn meta_slot(p: &Pattern, env: &Bindings) -> Option<StateParam> {
        let lift = |b: &Binding| match b {
            Binding::Top => Some(None),
            Binding::Ord(o) => Some(Some(MetaOrdinal::from_ordinal(o.clone()))),
            Binding::Meta(m) => Some(Some(m.clone())),
        };
        match p {
            Pattern::MetaLit(c) => Some(StateParam::Meta(c.clone())),
            Pattern::OrdLit(c) => Some(StateParam::Meta(MetaOrdinal::from_ordinal(c.clone()))),
            Pattern::Var(x) => match env.get(x) {
                None => Some(StateParam::Any),
                Some(b) => lift(b).map(|v| v.map_or(StateParam::Any, StateParam::Meta)),
            },
            Pattern::SuccOf(x) => match env.get(x).and_then(lift) {
                Some(Some(m)) => Some(StateParam::Meta(m.succ())),
                _ => None,
            },
        }
    }
    match (pattern, target) {
        (None, _) => Some(StateParam::Absent),
        (Some(ParamPattern::Single(p)), ParameterKind::Ordinal) => {
            Some(match ord_slot(p, env)? {
                Comp::Any => StateParam::Any,
                Comp::Val(o) => StateParam::Ord(o),
            })
        }
        (Some(ParamPattern::Single(p)), ParameterKind::MetaOrdinal) => meta_slot(p, env),
        (Some(ParamPattern::Pair(p, q)), ParameterKind::OrdinalPair) => {
            Some(StateParam::Pair(ord_slot(p, env)?, ord_slot(q, env)?))
        }
        _ => None,
    }
}

/// Pools of parameter values the search may weaken a degree down to:
/// the query endpoints plus every literal in the library.
struct Pools {
    ord: BTreeSet<Ordinal>,
    meta: BTreeSet<MetaOrdinal>,
}

impl Pools {
    fn collect(kb: &KnowledgeBase, endpoints: [&NodeInstance; 2]) -> Pools {
        let mut pools = Pools { ord: BTreeSet::new(), meta: BTreeSet::new() };
        for inst in endpoints {
            match &inst.param {
                None => {}
                Some(ParamValue::Ord(o)) => pools.add_ord(o.clone()),
                Some(ParamValue::Meta(m)) => pools.add_meta(m.clone()),
                Some(ParamValue::Pair(a, b)) => {
                    pools.add_ord(a.clone());
                    pools.add_ord(b.clone());
                }
            }
        }
        let mut slot = |p: &Pattern| match p {
            Pattern::OrdLit(o) => pools.add_ord(o.clone()),
            Pattern::MetaLit(m) => pools.add_meta(m.clone()),
            Pattern::Var(_) | Pattern::SuccOf(_) => {}
        };
        for e in &kb.edges {
            for pattern in [&e.from.pattern, &e.to.pattern] {
                match pattern {
                    None => {}
                    Some(ParamPattern::Single(p)) => slot(p),
                    Some(ParamPattern::Pair(p, q)) => {
                        slot(p);
                        slot(q);
                    }
                }
            }
        }
        pools
    }

    /// Every value enters both pools so that a degree reached through a
    /// cross-kind variable binding can still be weakened toward it.
    fn add_ord(&mut self, o: Ordinal) {
        self.meta.insert(MetaOrdinal::from_ordinal(o.clone()));
        self.ord.insert(o);
    }

    fn add_meta(&mut self, m: MetaOrdinal) {
        if let Some(o) = meta_as_ordinal(&m) {
            self.ord.insert(o);
        }
        self.meta.insert(m);
    }
}

struct Search {
    states: Vec<(usize, StateParam)>,
    parent: Vec<Option<(usize, ImplicationStep)>>,
    visited: BTreeSet<(usize, StateParam)>,
}

impl Search {
    fn push(
        &mut self,
        state: (usize, StateParam),
        from: Option<(usize, ImplicationStep)>,
    ) -> Result<(), QueryError> {
        if self.visited.insert(state.clone()) {
            if self.states.len() >= SEARCH_BUDGET {
                return Err(QueryError::SearchBudget(SEARCH_BUDGET));
            }
            self.states.push(state);
            self.parent.push(from);
        }
        Ok(())
    }

    fn path_to(&self, mut index: usize, extra: Option<ImplicationStep>) -> Vec<ImplicationStep> {
        let mut steps = Vec::new();
        while let Some((prev, step)) = &self.parent[index] {
            steps.push(step.clone());
            index = *prev;
        }
        steps.reverse();
        steps.extend(extra);
        steps
    }
}

/// Does `from` entail `to` in the recorded implication fragment?
///
/// The relation is the reflexive transitive closure of the `Implies` and
/// `Equivalent` edges, with parameterized nodes additionally weakening
/// downward: outside the hugeness family, holding at a degree entails
/// holding at every smaller degree, and pair parameters weaken in the
/// second component with the first held fixed. On success the returned
/// path lists one step per edge or weakening used; a reflexive query
/// yields an empty path.
pub fn kb_implies(
    kb: &KnowledgeBase,
    from: &str,
    to: &str,
) -> Result<Option<Vec<ImplicationStep>>, QueryError> {
    let start = parse_instance(kb, from)?;
    let goal = parse_instance(kb, to)?;
    let node_index = |id: &str| kb.nodes.iter().position(|n| n.id == id).expect("parsed id");
    let goal_node = node_index(&goal.node);
    let pools = Pools::collect(kb, [&start, &goal]);

    // Equivalences contribute a directed arc each way.
    let mut arcs = Vec::new();
    for e in &kb.edges {
        match e.kind {
            EdgeKind::Implies => arcs.push((&e.from, &e.to, e)),
            EdgeKind::Equivalent => {
                arcs.push((&e.from, &e.to, e));
                arcs.push((&e.to, &e.from, e));
            }
            EdgeKind::SeparatedByForcing | EdgeKind::NonSeparable => {}
        }
    }

    let mut search = Search { states: Vec::new(), parent: Vec::new(), visited: BTreeSet::new() };
    search.push((node_index(&start.node), StateParam::from_value(start.param.as_ref())), None)?;

    let mut head = 0;
    while head < search.states.len() {
        let (node, sp) = search.states[head].clone();
        if node == goal_node {
            if let Some(extra) = goal_reached(kb, node, &sp, goal.param.as_ref()) {
                return Ok(Some(search.path_to(head, extra)));
            }
        }
        let here = render_state(kb, node, &sp);

        for (src, dst, e) in &arcs {
            if src.node != kb.nodes[node].id {
                continue;
            }
            let mut env = Bindings::new();
            if !unify_state(&src.pattern, &sp, &mut env) {
                continue;
            }
            let dst_node = node_index(&dst.node);
            let Some(next) = substitute(&dst.pattern, &env, kb.nodes[dst_node].parameter) else {
                continue;
            };
            let step = ImplicationStep::Edge {
                citation: e.citation.clone(),
                quote: e.quote.clone(),
                from: here.clone(),
                to: render_state(kb, dst_node, &next),
            };
            search.push((dst_node, next), Some((head, step)))?;
        }

        if kb.nodes[node].family.monotone() {
            for next in weakenings(&sp, kb.nodes[node].parameter, &pools) {
                let step = ImplicationStep::Weaken {
                    from: here.clone(),
                    to: render_state(kb, node, &next),
                };
                search.push((node, next), Some((head, step)))?;
            }
        }
        head += 1;
    }
    Ok(None)
}

/// The weaker states reachable from `sp` by lowering a degree to a pool
/// value, or by instantiating a universal degree at one.
fn weakenings(sp: &StateParam, kind: ParameterKind, pools: &Pools) -> Vec<StateParam> {
    match sp {
        StateParam::Absent => Vec::new(),
        StateParam::Ord(w) => {
            pools.ord.iter().filter(|v| *v < w).cloned().map(StateParam::Ord).collect()
        }
        StateParam::Meta(m) => {
            pools.meta.iter().filter(|v| *v < m).cloned().map(StateParam::Meta).collect()
        }
        StateParam::Any => match kind {
            ParameterKind::Ordinal => pools.ord.iter().cloned().map(StateParam::Ord).collect(),
            ParameterKind::MetaOrdinal => {
                pools.meta.iter().cloned().map(StateParam::Meta).collect()
            }
            _ => Vec::new(),
        },
        StateParam::Pair(first, second) => {
            let below: Vec<&Ordinal> = match second {
                Comp::Any => pools.ord.iter().collect(),
                Comp::Val(w) => pools.ord.iter().filter(|v| *v < w).collect(),
            };
            below
                .into_iter()
                .map(|v| StateParam::Pair(first.clone(), Comp::Val(v.clone())))
                .collect()
        }
    }
}

/// Whether a state on the goal node covers the requested parameter;
/// `Some(step)` carries the final weakening if one is needed.
fn goal_reached(
    kb: &KnowledgeBase,
    node: usize,
    sp: &StateParam,
    goal: Option<&ParamValue>,
) -> Option<Option<ImplicationStep>> {
    let monotone = kb.nodes[node].family.monotone();
    let weaken = |exact: bool| {
        if exact {
            Some(None)
        } else {
            Some(Some(ImplicationStep::Weaken {
                from: render_state(kb, node, sp),
                to: render_state(kb, node, &StateParam::from_value(goal)),
            }))
        }
    };
    match (sp, goal) {
        (StateParam::Absent, None) => Some(None),
        (StateParam::Any, Some(_)) => weaken(false),
        (StateParam::Ord(w), Some(ParamValue::Ord(q))) => {
            if w == q {
                weaken(true)
            } else if monotone && w > q {
                weaken(false)
            } else {
                None
            }
        }
        (StateParam::Meta(m), Some(ParamValue::Meta(q))) => {
            if m == q {
                weaken(true)
            } else if monotone && m > q {
                weaken(false)
            } else {
                None
            }
        }
        (StateParam::Pair(a, b), Some(ParamValue::Pair(p, q))) => {
            let first_exact = match a {
                Comp::Any => false,
                Comp::Val(v) if v == p => true,
                Comp::Val(_) => return None,
            };
            match b {
                Comp::Any => weaken(false),
                Comp::Val(w) if w == q => weaken(first_exact),
                Comp::Val(w) if monotone && w > q => weaken(false),
                Comp::Val(_) => None,
            }
        }
        _ => None,
    }
}

/// All recorded separation and non-separability theorems matching the
/// ordered query: a forcing that preserves the first instance while the
/// second fails, or a proof that none can exist. Parameters must be
/// concrete; edges flagged `ordinal-parameters-only` are skipped when a
/// variable would have to stand for a term mentioning `W`.
pub fn kb_separations(
    kb: &KnowledgeBase,
    preserved: &str,
    destroyed: &str,
) -> Result<Vec<SeparationResult>, QueryError> {
    let a = parse_instance(kb, preserved)?;
    let b = parse_instance(kb, destroyed)?;
    let mut out = Vec::new();
    for e in &kb.edges {
        if !matches!(e.kind, EdgeKind::SeparatedByForcing | EdgeKind::NonSeparable) {
            continue;
        }
        if e.from.node != a.node || e.to.node != b.node {
            continue;
        }
        let mut env = Bindings::new();
        if !pattern::unify_concrete(&e.from.pattern, a.param.as_ref(), &mut env)
            || !pattern::unify_concrete(&e.to.pattern, b.param.as_ref(), &mut env)
        {
            continue;
        }
        if e.flags.contains(&EdgeFlag::OrdinalParametersOnly)
            && env
                .values()
                .any(|b| matches!(b, Binding::Meta(m) if meta_as_ordinal(m).is_none()))
        {
            continue;
        }
        out.push(SeparationResult {
            kind: e.kind,
            citation: e.citation.clone(),
            quote: e.quote.clone(),
            flags: e.flags.clone(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed;

    fn implies(from: &str, to: &str) -> Option<Vec<ImplicationStep>> {
        kb_implies(&seed(), from, to).unwrap()
    }

    #[test]
    fn reflexive_queries_have_empty_paths() {
        assert_eq!(implies("mahlo", "mahlo"), Some(Vec::new()));
        assert_eq!(
            implies("t-inaccessible(W^2+3)", "t-inaccessible(W^2+3)"),
            Some(Vec::new())
        );
    }

    #[test]
    fn measurable_implies_weakly_measurable_in_one_step() {
        let path = implies("measurable", "weakly-measurable").expect("recorded implication");
        assert_eq!(path.len(), 1);
        match &path[0] {
            ImplicationStep::Edge { citation, from, to, .. } => {
                assert_eq!(citation, "Measurable cardinals are weakly measurable");
                assert_eq!(from, "measurable");
                assert_eq!(to, "weakly-measurable");
            }
            other => panic!("expected an edge step, got {other:?}"),
        }
    }

    #[test]
    fn mahlo_has_every_degree_of_inaccessibility() {
        let path = implies("mahlo", "t-inaccessible(W^7)").expect("universal conclusion");
        assert!(path
            .iter()
            .any(|s| matches!(s, ImplicationStep::Edge { to, .. } if to == "t-inaccessible(*)")));
        assert_eq!(path.last().unwrap().to_instance(), "t-inaccessible(W^7)");
    }

    #[test]
    fn no_upward_implication_from_a_degree_to_mahlo() {
        assert_eq!(implies("t-inaccessible(W)", "mahlo"), None);
    }

    #[test]
    fn degrees_weaken_downward_to_the_base_property() {
        let path = implies("t-inaccessible(W)", "inaccessible").expect("weaken then equate");
        assert!(matches!(&path[0], ImplicationStep::Weaken { to, .. } if to == "t-inaccessible(0)"));
        assert_eq!(path.last().unwrap().to_instance(), "inaccessible");
    }

    #[test]
    fn weakly_compact_reaches_mahlo_through_degree_zero() {
        let path = implies("weakly-compact", "mahlo").expect("via the Mahlo degrees");
        assert_eq!(path.last().unwrap().to_instance(), "mahlo");
        // No degree is ever a detour upward: weak compactness also sits
        // above every concrete Mahlo degree.
        assert!(implies("weakly-compact", "t-mahlo(W*2+1)").is_some());
        assert_eq!(implies("mahlo", "weakly-compact"), None);
    }

    #[test]
    fn equivalences_run_both_ways() {
        assert!(implies("greatly-inaccessible", "mahlo").is_some());
        assert!(implies("mahlo", "greatly-inaccessible").is_some());
        assert!(implies("inaccessible", "sigma-n-reflecting(1)").is_some());
        assert!(implies("sigma-n-reflecting(1)", "inaccessible").is_some());
    }

    #[test]
    fn universal_conclusions_instantiate_anywhere() {
        assert!(implies("supercompact", "theta-strongly-compact(phi(1,0))").is_some());
        assert!(implies("supercompact", "lt-theta-supercompact(w^2)").is_some());
        assert!(implies("worldly", "sigma-n-worldly(17)").is_some());
    }

    #[test]
    fn pair_parameters_keep_their_threshold() {
        assert!(implies("theta-supercompact(w)", "mitchell-sc-rank-geq(w, 1)").is_some());
        assert!(implies("mitchell-sc-rank-geq(w, 3)", "theta-supercompact(w)").is_some());
        assert_eq!(implies("theta-supercompact(w)", "mitchell-sc-rank-geq(w^2, 1)"), None);
        // The universal threshold of a supercompact covers every pair.
        assert!(implies("supercompact", "mitchell-sc-rank-geq(w, 1)").is_some());
    }

    #[test]
    fn hugeness_targets_do_not_weaken() {
        assert_eq!(implies("huge-with-target(w^3)", "huge-with-target(w)"), None);
        assert_eq!(implies("superhuge", "huge-with-target(w)"), None);
    }

    #[test]
    fn the_recorded_fragment_keeps_known_gaps() {
        // Only stated theorems count, so measurability reaches the Ramsey
        // side but never inaccessibility in this fragment.
        assert!(implies("measurable", "strongly-ramsey").is_some());
        assert_eq!(implies("measurable", "inaccessible"), None);
        assert_eq!(implies("strongly-compact", "measurable"), None);
    }

    #[test]
    fn path_endpoints_chain() {
        let path = implies("ineffable", "worldly").expect("down the compactness chain");
        assert!(path.len() >= 3);
        assert_eq!(path[0].from_instance(), "ineffable");
        assert_eq!(path.last().unwrap().to_instance(), "worldly");
        for pair in path.windows(2) {
            assert_eq!(pair[0].to_instance(), pair[1].from_instance());
        }
    }

    #[test]
    fn unknown_nodes_and_bad_parameters_are_reported() {
        let kb = seed();
        assert_eq!(
            kb_implies(&kb, "hyper-worldly", "worldly").unwrap_err(),
            QueryError::UnknownNode("hyper-worldly".to_string())
        );
        assert!(matches!(
            kb_implies(&kb, "mahlo(3)", "worldly").unwrap_err(),
            QueryError::BadParameter { node, .. } if node == "mahlo"
        ));
        assert!(matches!(
            kb_implies(&kb, "t-inaccessible", "worldly").unwrap_err(),
            QueryError::BadParameter { node, .. } if node == "t-inaccessible"
        ));
        assert!(matches!(
            kb_implies(&kb, "t-inaccessible(%%)", "worldly").unwrap_err(),
            QueryError::BadParameter { node, .. } if node == "t-inaccessible"
        ));
        assert!(matches!(
            kb_implies(&kb, "mitchell-sc-rank-geq(1)", "worldly").unwrap_err(),
            QueryError::BadParameter { node, .. } if node == "mitchell-sc-rank-geq"
        ));
    }

    #[test]
    fn pair_instances_parse_through_nested_commas() {
        let kb = seed();
        let inst = parse_instance(&kb, "mitchell-sc-rank-geq(phi(1,0), 2)").unwrap();
        assert_eq!(inst.to_string(), "mitchell-sc-rank-geq(phi(1,0), 2)");
    }

    #[test]
    fn magidor_separation_is_found() {
        let kb = seed();
        let results = kb_separations(&kb, "strongly-compact", "supercompact").unwrap();
        assert_eq!(results.len(), 1);
        assert_eq!(results[0].kind, EdgeKind::SeparatedByForcing);
        assert!(results[0].citation.contains("Magidor"));
        assert!(results[0].quote.contains("strongly compact"));
    }

    #[test]
    fn ladder_separations_respect_the_ordinal_only_flag() {
        let kb = seed();
        // A plain ordinal degree matches both ladder theorems.
        let both = kb_separations(&kb, "t-mahlo(w)", "t-mahlo(w+1)").unwrap();
        assert_eq!(both.len(), 2);
        // A degree mentioning W is outside the ordinal-only version.
        let one = kb_separations(&kb, "t-mahlo(W)", "t-mahlo(W+1)").unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].citation, "Forcing to change one meta-ordinal Mahlo degree");
    }

    #[test]
    fn hyper_degree_collapse_matches_the_ordinal_ladder() {
        let kb = seed();
        let results = kb_separations(&kb, "t-inaccessible(w)", "t-inaccessible(W)").unwrap();
        assert_eq!(results.len(), 1);
        assert!(results[0].citation.contains("Collapsing hyper-inaccessibility"));
    }

    #[test]
    fn worldly_cannot_be_separated_from_inaccessible() {
        let kb = seed();
        let results = kb_separations(&kb, "worldly", "inaccessible").unwrap();
        assert_eq!(results.len(), 1);
        assert_eq!(results[0].kind, EdgeKind::NonSeparable);
        assert!(results[0].citation.contains("Fuchs"));
    }

    #[test]
    fn separations_need_matching_instances() {
        let kb = seed();
        assert!(kb_separations(&kb, "t-mahlo(W)", "t-mahlo(W+2)").unwrap().is_empty());
        assert!(kb_separations(&kb, "measurable", "supercompact").unwrap().is_empty());
        assert!(kb_separations(&kb, "theta-supercompact(w)", "theta-supercompact(w+2)")
            .unwrap()
            .is_empty());
    }

    #[test]
    fn successor_patterns_match_their_instances() {
        let kb = seed();
        let results = kb_separations(&kb, "t-inaccessible(W^3)", "t-inaccessible(W^3+1)").unwrap();
        assert_eq!(results.len(), 1);
        assert_eq!(
            results[0].citation,
            "Forcing to change one meta-ordinal degree of inaccessibility"
        );
        let pair = kb_separations(&kb, "mitchell-sc-rank-geq(w, 2)", "mitchell-sc-rank-geq(w, 3)")
            .unwrap();
        assert_eq!(pair.len(), 1);
        // Mismatched thresholds never match a ladder stated at one threshold.
        assert!(kb_separations(&kb, "mitchell-sc-rank-geq(w, 2)", "mitchell-sc-rank-geq(1, 3)")
            .unwrap()
            .is_empty());
    }
}
