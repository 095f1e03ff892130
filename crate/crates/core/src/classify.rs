//! Signatures of negation-words over the evaluation suite, the induced
//! preorder and equivalence, and the class census.
//!
//! A word's signature records in which of the nine suite contexts it is
//! valid. `a ⪯ b` holds exactly when `a`'s signature is contained in `b`'s;
//! [`verify_signature_criterion`] checks that against bounded countermodel
//! search.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::enumerate::{canonical_suite, ContextId, ModelPool, SearchBound};
use crate::error::{Error, Result};
use crate::formula::{Formula, NWord};
use crate::parse::parse_nword;

/// Validity over the nine suite contexts, in column order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature(pub [bool; 9]);

impl Signature {
    pub fn of_word(w: &NWord) -> Self {
        let suite = canonical_suite();
        Signature(std::array::from_fn(|i| suite[i].model.word_valid(w)))
    }

    pub fn of_formula(f: &Formula) -> Self {
        let suite = canonical_suite();
        Signature(std::array::from_fn(|i| suite[i].model.valid_in(f)))
    }

    pub fn get(&self, ctx: ContextId) -> bool {
        self.0[ctx.index()]
    }

    /// Every context valid for `self` is valid for `other`.
    pub fn is_subset(&self, other: &Signature) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(&a, &b)| !a || b)
    }

    pub fn count(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl FromStr for Signature {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let cells: Vec<bool> = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '+' => Ok(true),
                '-' | '−' => Ok(false),
                other => Err(format!("bad signature cell '{other}'")),
            })
            .collect::<std::result::Result<_, _>>()?;
        let arr: [bool; 9] = cells
            .try_into()
            .map_err(|v: Vec<bool>| format!("expected 9 cells, got {}", v.len()))?;
        Ok(Signature(arr))
    }
}

impl Serialize for Signature {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn signature(w: &NWord) -> Signature {
    Signature::of_word(w)
}

/// `a ⪯ b`: the implication `a -> b` is valid.
pub fn preceq(a: &NWord, b: &NWord) -> bool {
    signature(a).is_subset(&signature(b))
}

pub fn equivalent(a: &NWord, b: &NWord) -> bool {
    signature(a) == signature(b)
}

/// Order used to pick a class representative among its members: shorter
/// first, then fewer changes of negation kind, then lexicographic.
pub fn representative_order(a: &NWord, b: &NWord) -> Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.alternations().cmp(&b.alternations()))
        .then_with(|| a.cmp(b))
}

/// The fifteen class representatives, shortest first.
pub const REPRESENTATIVES: [&str; 15] = [
    "p", "~p", "!p", "~~p", "~!p", "!~p", "!!p", "~~!p", "~!!p", "!~~p", "!!~p", "~~!!p",
    "!~~!p", "!!~~p", "!~~!!p",
];

pub fn representatives() -> &'static [NWord] {
    static REPS: OnceLock<Vec<NWord>> = OnceLock::new();
    REPS.get_or_init(|| {
        REPRESENTATIVES
            .iter()
            .map(|s| parse_nword(s).expect("representatives parse"))
            .collect()
    })
}

fn representative_map() -> &'static BTreeMap<Signature, NWord> {
    static MAP: OnceLock<BTreeMap<Signature, NWord>> = OnceLock::new();
    MAP.get_or_init(|| {
        representatives()
            .iter()
            .map(|w| (signature(w), w.clone()))
            .collect()
    })
}

/// Looks the word's signature up among the fifteen class signatures.
pub fn normalize_semantic(w: &NWord) -> Result<NWord> {
    let sig = signature(w);
    representative_map()
        .get(&sig)
        .cloned()
        .ok_or_else(|| Error::CensusInconsistency {
            word: w.to_string(),
            signature: sig.to_string(),
        })
}

/// No shorter word is equivalent to `w`.
pub fn is_irreducible(w: &NWord) -> Result<bool> {
    Ok(normalize_semantic(w)?.len() == w.len())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivClass {
    pub representative: NWord,
    /// Members found by the census, in word order.
    pub members: Vec<NWord>,
    pub signature: Signature,
}

impl EquivClass {
    /// Members with no shorter equivalent.
    pub fn irreducible_members(&self) -> Vec<&NWord> {
        let len = self.representative.len();
        self.members.iter().filter(|w| w.len() == len).collect()
    }
}

#[derive(Debug, Serialize)]
struct ClassJson {
    representative: String,
    signature: Signature,
    member_count: usize,
    irreducible_members: Vec<String>,
}

/// Partitions every word of length at most `max_len` by signature.
pub fn census(max_len: usize) -> Vec<EquivClass> {
    let mut by_sig: BTreeMap<Signature, Vec<NWord>> = BTreeMap::new();
    for w in NWord::all_up_to(max_len) {
        by_sig.entry(signature(&w)).or_default().push(w);
    }
    let mut classes: Vec<EquivClass> = by_sig
        .into_iter()
        .map(|(signature, mut members)| {
            members.sort();
            let representative = members
                .iter()
                .min_by(|a, b| representative_order(a, b))
                .cloned()
                .expect("classes are non-empty");
            EquivClass {
                representative,
                members,
                signature,
            }
        })
        .collect();
    classes.sort_by(|a, b| a.representative.cmp(&b.representative));
    classes
}

pub fn census_json(classes: &[EquivClass]) -> String {
    let rows: Vec<ClassJson> = classes
        .iter()
        .map(|c| ClassJson {
            representative: c.representative.to_string(),
            signature: c.signature,
            member_count: c.members.len(),
            irreducible_members: c.irreducible_members().iter().map(|w| w.to_string()).collect(),
        })
        .collect();
    serde_json::to_string_pretty(&rows).expect("census rows serialize")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    pub antecedent: NWord,
    pub consequent: NWord,
    pub by_signature: bool,
    pub by_search: bool,
}

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub pairs_checked: usize,
    pub models_searched: usize,
    pub disagreements: Vec<Disagreement>,
}

impl CriterionReport {
    pub fn agrees(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Compares signature containment with bounded countermodel search for
/// every ordered pair of words up to `max_len`.
pub fn verify_signature_criterion(max_len: usize, bound: SearchBound) -> CriterionReport {
    let pool = ModelPool::new(bound, 1);
    let words: Vec<NWord> = NWord::all_up_to(max_len).collect();
    let sigs: Vec<Signature> = words.iter().map(signature).collect();
    let formulas: Vec<Formula> = words.iter().map(NWord::to_formula).collect();
    let mut disagreements = Vec::new();
    for (i, a) in words.iter().enumerate() {
        for (j, b) in words.iter().enumerate() {
            let by_signature = sigs[i].is_subset(&sigs[j]);
            let by_search = pool.is_valid(&Formula::imp(formulas[i].clone(), formulas[j].clone()));
            if by_signature != by_search {
                disagreements.push(Disagreement {
                    antecedent: a.clone(),
                    consequent: b.clone(),
                    by_signature,
                    by_search,
                });
            }
        }
    }
    CriterionReport {
        pairs_checked: words.len() * words.len(),
        models_searched: pool.models().len(),
        disagreements,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> NWord {
        parse_nword(s).unwrap()
    }

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    #[test]
    fn signature_examples() {
        assert_eq!(signature(&w("~!p")), sig("-+-------"));
        assert_eq!(signature(&w("!~p")), sig("-+-++++++"));
        // The anti-chain cell is "-", not the "+" printed in the appendix.
        assert_eq!(signature(&w("p")), sig("-+--+--+-"));
    }

    #[test]
    fn signature_text_round_trip() {
        let s = signature(&w("~~!p"));
        assert_eq!(s.to_string().parse::<Signature>().unwrap(), s);
        assert!("++".parse::<Signature>().is_err());
        assert!("+-+-+-+-x".parse::<Signature>().is_err());
    }

    #[test]
    fn preceq_examples() {
        assert!(preceq(&w("~!p"), &w("p")));
        assert!(!preceq(&w("p"), &w("~!p")));
        assert!(preceq(&w("!~!p"), &w("!~!p")));
    }

    #[test]
    fn equivalence_examples() {
        assert!(equivalent(&w("~~~p"), &w("~p")));
        assert!(!equivalent(&w("!!p"), &w("p")));
        assert!(equivalent(&w("~~!p"), &w("!~!p")));
    }

    #[test]
    fn semantic_normal_forms() {
        assert_eq!(normalize_semantic(&w("!!!!!p")).unwrap(), w("!p"));
        assert_eq!(normalize_semantic(&w("p")).unwrap(), w("p"));
        assert_eq!(normalize_semantic(&w("~!!~!p")).unwrap(), w("~!!p"));
    }

    #[test]
    fn census_of_length_one() {
        let classes = census(1);
        let reps: Vec<String> = classes.iter().map(|c| c.representative.to_string()).collect();
        assert_eq!(reps, ["p", "~p", "!p"]);
    }

    #[test]
    fn census_representatives() {
        let classes = census(5);
        assert_eq!(classes.len(), 15);
        let reps: Vec<String> = classes.iter().map(|c| c.representative.to_string()).collect();
        assert_eq!(reps, REPRESENTATIVES);
        let five = classes.iter().find(|c| c.representative == w("!~~!!p")).unwrap();
        let irr: Vec<String> = five.irreducible_members().iter().map(|w| w.to_string()).collect();
        assert_eq!(irr, ["!~~!~p", "!~~!!p", "!!~!~p", "!!~!!p"]);
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&w("p")).unwrap());
        assert!(is_irreducible(&w("!!~~p")).unwrap());
        assert!(is_irreducible(&w("!~!p")).unwrap());
        assert!(!is_irreducible(&w("~~~p")).unwrap());
    }

    #[test]
    fn criterion_trivial_cases() {
        let r = verify_signature_criterion(0, SearchBound::default());
        assert_eq!(r.pairs_checked, 1);
        assert!(r.agrees());
        let r = verify_signature_criterion(3, SearchBound::default());
        assert_eq!(r.pairs_checked, 15 * 15);
        assert!(r.agrees(), "{:?}", r.disagreements);
    }

    #[test]
    fn census_json_shape() {
        let json: serde_json::Value = serde_json::from_str(&census_json(&census(1))).unwrap();
        assert_eq!(json[0]["representative"], "p");
        assert_eq!(json[0]["signature"], "-+--+--+-");
        assert_eq!(json[1]["member_count"], 1);
    }
}
