//! Rewrite-based normalization of negation-words.
//!
//! Every rule replaces a factor of the word by an equivalent, no longer one.
//! Equivalences proved for `p` hold for any substituted formula and under any
//! negation prefix, so rules may fire at any position. Redexes are contracted
//! innermost first (the one ending closest to `p`).
//!
//! This route never evaluates a model; [`crate::classify::normalize_semantic`]
//! is the independent cross-check.

use std::fmt;

use crate::formula::{NWord, NegKind};

/// A rewrite rule over negation sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    /// A fixed factor `lhs` rewrites to `rhs`.
    Factor {
        lhs: &'static str,
        rhs: &'static str,
        reason: &'static str,
    },
    /// `~!v` with `|v|` even and non-empty rewrites to `~!`.
    AbsorbEven,
    /// `~!v` with `|v|` odd and `v != !` rewrites to `~!!`.
    AbsorbOdd,
}

/// Factor rules, tried after absorption.
pub const FACTOR_RULES: [Rule; 7] = [
    Rule::Factor { lhs: "~~~", rhs: "~", reason: "triple intuitionistic negation" },
    Rule::Factor { lhs: "!!!", rhs: "!", reason: "triple bot-negation" },
    Rule::Factor { lhs: "!~!", rhs: "~~!", reason: "length-3 class of ~~!p" },
    Rule::Factor { lhs: "~~!~", rhs: "~~!!", reason: "length-4 class of ~~!!p" },
    Rule::Factor { lhs: "!!~!", rhs: "!~~!", reason: "length-4 class of !~~!p" },
    Rule::Factor { lhs: "!!~~!", rhs: "~~!", reason: "!!~~!p collapses to ~~!p" },
    // `!` in front of the length-5 class, via its member `!!~!!p`.
    Rule::Factor { lhs: "!!~~!!", rhs: "~~!!", reason: "bot-negation of the length-5 class" },
];

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::Factor { lhs, rhs, reason } => write!(f, "{lhs} => {rhs} ({reason})"),
            Rule::AbsorbEven => write!(f, "~!v => ~! for even |v| > 0"),
            Rule::AbsorbOdd => write!(f, "~!v => ~!! for odd |v|, v != !"),
        }
    }
}

fn kinds(s: &str) -> Vec<NegKind> {
    s.chars()
        .map(|c| match c {
            '~' => NegKind::Int,
            '!' => NegKind::Perp,
            other => unreachable!("rule text contains {other}"),
        })
        .collect()
}

/// One contraction: `rule` replaced `negs[start..end]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteStep {
    pub rule: Rule,
    pub start: usize,
    pub end: usize,
    pub result: NWord,
}

/// A redex as (end, start, rule, replacement).
type Redex = (usize, usize, Rule, Vec<NegKind>);

fn redexes(negs: &[NegKind]) -> Vec<Redex> {
    let n = negs.len();
    let mut out = Vec::new();
    for i in 0..n.saturating_sub(1) {
        if negs[i] == NegKind::Int && negs[i + 1] == NegKind::Perp {
            let tail = &negs[i + 2..];
            if !tail.is_empty() && tail.len().is_multiple_of(2) {
                out.push((n, i, Rule::AbsorbEven, kinds("~!")));
            } else if tail.len() % 2 == 1 && tail != [NegKind::Perp] {
                out.push((n, i, Rule::AbsorbOdd, kinds("~!!")));
            }
        }
    }
    for rule in FACTOR_RULES {
        let Rule::Factor { lhs, rhs, .. } = rule else { continue };
        let lhs = kinds(lhs);
        if lhs.len() > n {
            continue;
        }
        for i in 0..=n - lhs.len() {
            if negs[i..i + lhs.len()] == lhs[..] {
                out.push((i + lhs.len(), i, rule, kinds(rhs)));
            }
        }
    }
    out
}

/// The innermost redex: greatest end, then greatest start.
fn innermost(negs: &[NegKind]) -> Option<Redex> {
    redexes(negs)
        .into_iter()
        .max_by_key(|&(end, start, _, _)| (end, start))
}

/// Rewrites `w` to normal form and records every step.
pub fn normalize_trace(w: &NWord) -> (NWord, Vec<RewriteStep>) {
    let mut negs = w.negs().to_vec();
    let mut steps = Vec::new();
    while let Some((end, start, rule, rhs)) = innermost(&negs) {
        negs.splice(start..end, rhs);
        steps.push(RewriteStep {
            rule,
            start,
            end,
            result: NWord::new(negs.clone()),
        });
    }
    (NWord::new(negs), steps)
}

/// Normal form of `w` under the rewrite rules: one of the fifteen class
/// representatives.
pub fn normalize(w: &NWord) -> NWord {
    normalize_trace(w).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_nword;

    fn n(s: &str) -> String {
        normalize(&parse_nword(s).unwrap()).to_string()
    }

    #[test]
    fn runs_collapse() {
        assert_eq!(n("~~~~~p"), "~p");
        assert_eq!(n("!!!!!p"), "!p");
        assert_eq!(n("~~~~p"), "~~p");
        assert_eq!(n("!!!!!!p"), "!!p");
    }

    #[test]
    fn absorption() {
        assert_eq!(n("~!~~p"), "~!p");
        assert_eq!(n("~!~p"), "~!!p");
        assert_eq!(n("~!!~!p"), "~!!p");
        assert_eq!(n("~!!p"), "~!!p");
    }

    #[test]
    fn length_five_cases() {
        assert_eq!(n("!!~~!p"), "~~!p");
        assert_eq!(n("!~~!~p"), "!~~!!p");
        assert_eq!(n("!!~!~p"), "!~~!!p");
        assert_eq!(n("!!~!!p"), "!~~!!p");
    }

    #[test]
    fn six_negations() {
        assert_eq!(n("~!~~!!p"), "~!p");
        assert_eq!(n("!!~~!!p"), "~~!!p");
    }

    #[test]
    fn representatives_are_normal_forms() {
        for s in crate::classify::REPRESENTATIVES {
            assert_eq!(n(s), s);
        }
    }

    #[test]
    fn trace_records_steps() {
        let (nf, steps) = normalize_trace(&parse_nword("!~!~p").unwrap());
        assert_eq!(nf.to_string(), "~~!!p");
        assert!(!steps.is_empty());
        assert_eq!(steps.last().unwrap().result, nf);
        for s in &steps {
            assert!(s.start < s.end);
        }
    }
}
