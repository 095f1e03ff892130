//! Formula AST for the full language and negation-words for the monadic
//! negational fragment.

use std::cmp::Ordering;
use std::fmt;

use crate::error::Error;

/// A formula over variables `p1, p2, ...`, the constants `0`, `1`, `bot`,
/// the two primitive negations and the binary connectives.
///
/// The biconditional is parse-time sugar and has no node of its own.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    /// Variable with a 1-based index; `Var(1)` is `p`.
    Var(u32),
    Zero,
    One,
    Bot,
    IntNeg(Box<Formula>),
    PerpNeg(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn p() -> Self {
        Formula::Var(1)
    }

    pub fn int_neg(f: Formula) -> Self {
        Formula::IntNeg(Box::new(f))
    }

    pub fn perp_neg(f: Formula) -> Self {
        Formula::PerpNeg(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Self {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    /// `(a -> b) & (b -> a)`.
    pub fn iff(a: Formula, b: Formula) -> Self {
        Formula::and(Formula::imp(a.clone(), b.clone()), Formula::imp(b, a))
    }

    pub fn negate(kind: NegKind, f: Formula) -> Self {
        match kind {
            NegKind::Int => Formula::int_neg(f),
            NegKind::Perp => Formula::perp_neg(f),
        }
    }

    /// Nesting depth; leaves have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Zero | Formula::One | Formula::Bot => 0,
            Formula::IntNeg(a) | Formula::PerpNeg(a) => 1 + a.depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }

    /// Largest variable index occurring in the formula, 0 if none.
    pub fn max_var(&self) -> u32 {
        match self {
            Formula::Var(i) => *i,
            Formula::Zero | Formula::One | Formula::Bot => 0,
            Formula::IntNeg(a) | Formula::PerpNeg(a) => a.max_var(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.max_var().max(b.max_var())
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Imp(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            _ => 4,
        }
    }

    /// Renders with Unicode symbols (`¬`, `⊥`, `∧`, `∨`, `→`) for human-facing output.
    pub fn pretty(&self) -> String {
        self.to_string()
            .replace("->", "→")
            .replace('!', "¬")
            .replace("bot", "⊥")
            .replace('&', "∧")
            .replace('|', "∨")
    }
}

fn write_child(child: &Formula, parens: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if parens {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(1) => write!(f, "p"),
            Formula::Var(i) => write!(f, "p{i}"),
            Formula::Zero => write!(f, "0"),
            Formula::One => write!(f, "1"),
            Formula::Bot => write!(f, "bot"),
            Formula::IntNeg(a) => {
                write!(f, "~")?;
                write_child(a, a.precedence() < 4, f)
            }
            Formula::PerpNeg(a) => {
                write!(f, "!")?;
                write_child(a, a.precedence() < 4, f)
            }
            // `&` and `|` associate to the left, `->` to the right.
            Formula::And(a, b) | Formula::Or(a, b) => {
                let prec = self.precedence();
                let op = if prec == 3 { "&" } else { "|" };
                write_child(a, a.precedence() < prec, f)?;
                write!(f, " {op} ")?;
                write_child(b, b.precedence() <= prec, f)
            }
            Formula::Imp(a, b) => {
                write_child(a, a.precedence() <= 1, f)?;
                write!(f, " -> ")?;
                write_child(b, b.precedence() < 1, f)
            }
        }
    }
}

/// One of the two primitive negations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NegKind {
    /// Intuitionistic negation `~A`, i.e. `A -> 0`.
    Int,
    /// The ⊥-negation `!A`, i.e. `A -> bot`.
    Perp,
}

impl NegKind {
    pub const ALL: [NegKind; 2] = [NegKind::Int, NegKind::Perp];

    pub fn symbol(self) -> char {
        match self {
            NegKind::Int => '~',
            NegKind::Perp => '!',
        }
    }

    pub fn pretty_symbol(self) -> char {
        match self {
            NegKind::Int => '~',
            NegKind::Perp => '¬',
        }
    }
}

/// A negation-word `N_k p`: negations listed outermost first, applied to `p`.
///
/// Ordered by length, then lexicographically with `Int < Perp`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct NWord {
    negs: Vec<NegKind>,
}

impl NWord {
    pub fn new(negs: Vec<NegKind>) -> Self {
        Self { negs }
    }

    /// The bare variable `p`.
    pub fn var() -> Self {
        Self::default()
    }

    pub fn negs(&self) -> &[NegKind] {
        &self.negs
    }

    pub fn into_negs(self) -> Vec<NegKind> {
        self.negs
    }

    pub fn len(&self) -> usize {
        self.negs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.negs.is_empty()
    }

    /// 0 for even words, 1 for odd.
    pub fn parity(&self) -> usize {
        self.negs.len() % 2
    }

    /// `kind · self`.
    pub fn prefixed(&self, kind: NegKind) -> NWord {
        let mut negs = Vec::with_capacity(self.negs.len() + 1);
        negs.push(kind);
        negs.extend_from_slice(&self.negs);
        NWord { negs }
    }

    /// `prefix · self`.
    pub fn with_prefix(&self, prefix: &NWord) -> NWord {
        let mut negs = prefix.negs.clone();
        negs.extend_from_slice(&self.negs);
        NWord { negs }
    }

    /// Number of adjacent positions where the negation kind changes.
    pub fn alternations(&self) -> usize {
        self.negs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// All words of exactly `len` negations, in `Ord` order.
    pub fn all_of_len(len: usize) -> impl Iterator<Item = NWord> {
        (0u64..1 << len).map(move |bits| {
            let negs = (0..len)
                .map(|i| {
                    if bits >> (len - 1 - i) & 1 == 1 {
                        NegKind::Perp
                    } else {
                        NegKind::Int
                    }
                })
                .collect();
            NWord { negs }
        })
    }

    /// All words of length `0..=max_len`, shortest first.
    pub fn all_up_to(max_len: usize) -> impl Iterator<Item = NWord> {
        (0..=max_len).flat_map(NWord::all_of_len)
    }

    /// Rendering with `¬` for the ⊥-negation.
    pub fn pretty(&self) -> String {
        let mut s: String = self.negs.iter().map(|k| k.pretty_symbol()).collect();
        s.push('p');
        s
    }

    /// Folds the word over `p` using the primitive negation nodes.
    pub fn to_formula(&self) -> Formula {
        nword_to_formula(self, NegationForm::Primitive)
    }

    /// Reads a formula built only from negations over `p` back as a word.
    pub fn from_formula(f: &Formula) -> Result<NWord, Error> {
        let mut negs = Vec::new();
        let mut cur = f;
        loop {
            match cur {
                Formula::IntNeg(a) => {
                    negs.push(NegKind::Int);
                    cur = a;
                }
                Formula::PerpNeg(a) => {
                    negs.push(NegKind::Perp);
                    cur = a;
                }
                Formula::Var(1) => return Ok(NWord { negs }),
                _ => return Err(Error::NotAnNFormula(f.to_string())),
            }
        }
    }
}

impl From<Vec<NegKind>> for NWord {
    fn from(negs: Vec<NegKind>) -> Self {
        Self { negs }
    }
}

impl Ord for NWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.negs
            .len()
            .cmp(&other.negs.len())
            .then_with(|| self.negs.cmp(&other.negs))
    }
}

impl PartialOrd for NWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in &self.negs {
            write!(f, "{}", k.symbol())?;
        }
        write!(f, "p")
    }
}

/// How negations are spelled when a word is turned into a full formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NegationForm {
    /// `IntNeg` / `PerpNeg` nodes.
    Primitive,
    /// `A -> 0` / `A -> bot`.
    Defined,
}

pub fn nword_to_formula(w: &NWord, form: NegationForm) -> Formula {
    w.negs.iter().rev().fold(Formula::p(), |acc, &k| match form {
        NegationForm::Primitive => Formula::negate(k, acc),
        NegationForm::Defined => match k {
            NegKind::Int => Formula::imp(acc, Formula::Zero),
            NegKind::Perp => Formula::imp(acc, Formula::Bot),
        },
    })
}

/// Rewrites every primitive negation in `f` into its defined implication.
pub fn expand_negations(f: &Formula) -> Formula {
    match f {
        Formula::Var(_) | Formula::Zero | Formula::One | Formula::Bot => f.clone(),
        Formula::IntNeg(a) => Formula::imp(expand_negations(a), Formula::Zero),
        Formula::PerpNeg(a) => Formula::imp(expand_negations(a), Formula::Bot),
        Formula::And(a, b) => Formula::and(expand_negations(a), expand_negations(b)),
        Formula::Or(a, b) => Formula::or(expand_negations(a), expand_negations(b)),
        Formula::Imp(a, b) => Formula::imp(expand_negations(a), expand_negations(b)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use NegKind::*;

    #[test]
    fn empty_word_is_variable() {
        assert_eq!(nword_to_formula(&NWord::var(), NegationForm::Primitive), Formula::p());
    }

    #[test]
    fn defined_forms() {
        let int = NWord::new(vec![Int]);
        let perp = NWord::new(vec![Perp]);
        assert_eq!(
            nword_to_formula(&int, NegationForm::Defined),
            Formula::imp(Formula::p(), Formula::Zero)
        );
        assert_eq!(
            nword_to_formula(&perp, NegationForm::Defined),
            Formula::imp(Formula::p(), Formula::Bot)
        );
    }

    #[test]
    fn primitive_form_is_outermost_first() {
        let w = NWord::new(vec![Int, Perp, Int, Int]);
        let expected = Formula::int_neg(Formula::perp_neg(Formula::int_neg(Formula::int_neg(
            Formula::p(),
        ))));
        assert_eq!(w.to_formula(), expected);
        assert_eq!(NWord::from_formula(&expected).unwrap(), w);
    }

    #[test]
    fn render_examples() {
        assert_eq!(Formula::or(Formula::p(), Formula::perp_neg(Formula::p())).to_string(), "p | !p");
        assert_eq!(NWord::new(vec![Int, Perp]).to_string(), "~!p");
        let f = Formula::imp(Formula::imp(Formula::p(), Formula::Zero), Formula::Zero);
        assert_eq!(f.to_string(), "(p -> 0) -> 0");
        let g = Formula::imp(Formula::p(), Formula::imp(Formula::Var(2), Formula::Bot));
        assert_eq!(g.to_string(), "p -> p2 -> bot");
        let h = Formula::or(Formula::p(), Formula::or(Formula::One, Formula::Zero));
        assert_eq!(h.to_string(), "p | (1 | 0)");
        assert_eq!(Formula::int_neg(Formula::and(Formula::p(), Formula::One)).to_string(), "~(p & 1)");
    }

    #[test]
    fn word_order_and_enumeration() {
        let words: Vec<_> = NWord::all_up_to(2).map(|w| w.to_string()).collect();
        assert_eq!(words, ["p", "~p", "!p", "~~p", "~!p", "!~p", "!!p"]);
        assert_eq!(NWord::all_up_to(12).count(), 8191);
    }

    #[test]
    fn parity_and_alternations() {
        let w = NWord::new(vec![Perp, Int, Int, Perp, Perp]);
        assert_eq!(w.parity(), 1);
        assert_eq!(w.alternations(), 2);
        assert_eq!(w.pretty(), "¬~~¬¬p");
    }

    #[test]
    fn multi_variable_formula_is_not_a_word() {
        assert!(NWord::from_formula(&Formula::int_neg(Formula::Var(2))).is_err());
    }
}
