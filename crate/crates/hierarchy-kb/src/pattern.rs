//! Parameter patterns on the endpoints of a theorem edge.
//!
//! An endpoint is written `id`, `id(p)` or `id(p, q)`. Each slot is a
//! literal term, a bare variable, or `x+1` for the successor of a variable.
//! Term syntax wins: `w` is the ordinal omega, never a variable, and `W+1`
//! is a degree term literal. A slot that is none of the three shapes is
//! rejected when the file loads.

use metaordinal::MetaOrdinal;
use ordinal::Ordinal;
use std::collections::BTreeMap;
use std::fmt;

/// One endpoint of an edge: a node id plus an optional parameter pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeRef {
    pub node: String,
    pub pattern: Option<ParamPattern>,
}

impl fmt::Display for NodeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.pattern {
            None => write!(f, "{}", self.node),
            Some(ParamPattern::Single(p)) => write!(f, "{}({p})", self.node),
            Some(ParamPattern::Pair(p, q)) => write!(f, "{}({p}, {q})", self.node),
        }
    }
}

/// The parameter slots of an endpoint, one per component of the node's
/// parameter kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamPattern {
    Single(Pattern),
    Pair(Pattern, Pattern),
}

/// A single parameter slot of a pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pattern {
    OrdLit(Ordinal),
    MetaLit(MetaOrdinal),
    Var(String),
    /// `x+1`: matches exactly the successors of whatever `x` stands for.
    SuccOf(String),
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::OrdLit(o) => write!(f, "{o}"),
            Pattern::MetaLit(m) => write!(f, "{m}"),
            Pattern::Var(x) => write!(f, "{x}"),
            Pattern::SuccOf(x) => write!(f, "{x}+1"),
        }
    }
}

/// A concrete parameter value attached to a query instance.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParamValue {
    Ord(Ordinal),
    Meta(MetaOrdinal),
    Pair(Ordinal, Ordinal),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Ord(o) => write!(f, "{o}"),
            ParamValue::Meta(m) => write!(f, "{m}"),
            ParamValue::Pair(a, b) => write!(f, "{a}, {b}"),
        }
    }
}

/// What a pattern variable is known to stand for while matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Binding {
    /// The match covers every value of the variable at once.
    Top,
    Ord(Ordinal),
    Meta(MetaOrdinal),
}

pub(crate) type Bindings = BTreeMap<String, Binding>;

/// The component type a slot ranges over, fixed by the node's parameter
/// kind when the pattern is parsed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum SlotKind {
    Ord,
    Meta,
}

pub(crate) fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '-' || c == '_')
}

/// Split on commas that are not nested inside parentheses, so that terms
/// like `phi(1,0)` survive as one slot.
pub(crate) fn split_slots(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

pub(crate) fn parse_slot(text: &str, kind: SlotKind) -> Result<Pattern, String> {
    let t = text.trim();
    match kind {
        SlotKind::Ord => {
            if let Ok(o) = t.parse::<Ordinal>() {
                return Ok(Pattern::OrdLit(o));
            }
        }
        SlotKind::Meta => {
            if let Ok(m) = t.parse::<MetaOrdinal>() {
                return Ok(Pattern::MetaLit(m));
            }
        }
    }
    if let Some(base) = t.strip_suffix("+1") {
        let base = base.trim_end();
        if is_ident(base) {
            return Ok(Pattern::SuccOf(base.to_string()));
        }
    }
    if is_ident(t) {
        return Ok(Pattern::Var(t.to_string()));
    }
    Err(format!("`{t}` is not a term, a variable, or `var+1`"))
}

/// Record `x := b`, failing only on a clash with an existing binding.
pub(crate) fn bind(env: &mut Bindings, x: &str, b: Binding) -> bool {
    match env.get(x) {
        None | Some(Binding::Top) => {
            env.insert(x.to_string(), b);
            true
        }
        Some(existing) => compatible(existing, &b),
    }
}

fn compatible(a: &Binding, b: &Binding) -> bool {
    match (a, b) {
        (_, Binding::Top) | (Binding::Top, _) => true,
        (Binding::Ord(x), Binding::Ord(y)) => x == y,
        (Binding::Meta(x), Binding::Meta(y)) => x == y,
        (Binding::Ord(o), Binding::Meta(m)) | (Binding::Meta(m), Binding::Ord(o)) => {
            meta_as_ordinal(m).is_some_and(|c| c == *o)
        }
    }
}

/// The constant of a degree term with no `W` part, if it is one.
pub(crate) fn meta_as_ordinal(m: &MetaOrdinal) -> Option<Ordinal> {
    if m.omega_terms().len() == 0 {
        Some(m.constant().clone())
    } else {
        None
    }
}

/// The immediate predecessor of a degree term, when its constant is a
/// successor ordinal.
pub(crate) fn meta_pred(m: &MetaOrdinal) -> Option<MetaOrdinal> {
    let c = m.constant().pred()?;
    Some(MetaOrdinal::from_parts(
        m.omega_terms().map(|(e, b)| (e.clone(), b.clone())),
        c,
    ))
}

pub(crate) fn unify_ord(p: &Pattern, v: &Ordinal, env: &mut Bindings) -> bool {
    match p {
        Pattern::OrdLit(c) => c == v,
        Pattern::MetaLit(c) => meta_as_ordinal(c).is_some_and(|c| c == *v),
        Pattern::Var(x) => bind(env, x, Binding::Ord(v.clone())),
        Pattern::SuccOf(x) => match v.pred() {
            Some(p0) => bind(env, x, Binding::Ord(p0)),
            None => false,
        },
    }
}

pub(crate) fn unify_meta(p: &Pattern, v: &MetaOrdinal, env: &mut Bindings) -> bool {
    match p {
        Pattern::MetaLit(c) => c == v,
        Pattern::OrdLit(c) => meta_as_ordinal(v).is_some_and(|w| w == *c),
        Pattern::Var(x) => bind(env, x, Binding::Meta(v.clone())),
        Pattern::SuccOf(x) => match meta_pred(v) {
            Some(p0) => bind(env, x, Binding::Meta(p0)),
            None => false,
        },
    }
}

/// Match a pattern against a concrete query value, extending `env`.
pub(crate) fn unify_concrete(
    pattern: &Option<ParamPattern>,
    value: Option<&ParamValue>,
    env: &mut Bindings,
) -> bool {
    match (pattern, value) {
        (None, None) => true,
        (Some(ParamPattern::Single(p)), Some(ParamValue::Ord(o))) => unify_ord(p, o, env),
        (Some(ParamPattern::Single(p)), Some(ParamValue::Meta(m))) => unify_meta(p, m, env),
        (Some(ParamPattern::Pair(p, q)), Some(ParamValue::Pair(a, b))) => {
            unify_ord(p, a, env) && unify_ord(q, b, env)
        }
        _ => false,
    }
}

/// The variables a pattern mentions.
pub(crate) fn pattern_vars(pattern: &Option<ParamPattern>) -> std::collections::BTreeSet<String> {
    fn slot(p: &Pattern, out: &mut std::collections::BTreeSet<String>) {
        if let Pattern::Var(x) | Pattern::SuccOf(x) = p {
            out.insert(x.clone());
        }
    }
    let mut out = std::collections::BTreeSet::new();
    match pattern {
        None => {}
        Some(ParamPattern::Single(p)) => slot(p, &mut out),
        Some(ParamPattern::Pair(p, q)) => {
            slot(p, &mut out);
            slot(q, &mut out);
        }
    }
    out
}
