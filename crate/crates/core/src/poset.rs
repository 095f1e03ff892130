//! The ⪯ order on class representatives, optionally with the constants
//! `0`, `bot`, `1` adjoined, and its Hasse diagram.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::classify::{preceq, representatives, Signature};
use crate::enumerate::{ModelPool, SearchBound};
use crate::error::{Error, Result};
use crate::formula::{Formula, NWord};
use crate::parse::parse_nword;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeLabel {
    Word(NWord),
    Zero,
    Bot,
    One,
}

impl NodeLabel {
    pub fn to_formula(&self) -> Formula {
        match self {
            NodeLabel::Word(w) => w.to_formula(),
            NodeLabel::Zero => Formula::Zero,
            NodeLabel::Bot => Formula::Bot,
            NodeLabel::One => Formula::One,
        }
    }

    pub fn is_constant(&self) -> bool {
        !matches!(self, NodeLabel::Word(_))
    }

    pub fn pretty(&self) -> String {
        match self {
            NodeLabel::Word(w) => w.pretty(),
            NodeLabel::Bot => "⊥".to_string(),
            other => other.to_string(),
        }
    }
}

impl FromStr for NodeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "0" => NodeLabel::Zero,
            "1" => NodeLabel::One,
            "bot" | "⊥" => NodeLabel::Bot,
            other => NodeLabel::Word(parse_nword(other)?),
        })
    }
}

impl fmt::Display for NodeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeLabel::Word(w) => write!(f, "{w}"),
            NodeLabel::Zero => f.write_str("0"),
            NodeLabel::Bot => f.write_str("bot"),
            NodeLabel::One => f.write_str("1"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetNode {
    pub label: NodeLabel,
    pub signature: Signature,
}

/// Covers among even words, lower element first.
pub const EVEN_COVERS: [(&str, &str); 9] = [
    ("~!p", "p"),
    ("~!p", "!~~!p"),
    ("p", "~~p"),
    ("p", "!!p"),
    ("~~p", "!!~~p"),
    ("!!p", "!!~~p"),
    ("!!~~p", "!~p"),
    ("!~p", "~~!!p"),
    ("!~~!p", "!!p"),
];

/// Covers among odd words, lower element first.
pub const ODD_COVERS: [(&str, &str); 7] = [
    ("~!!p", "~p"),
    ("~!!p", "!~~!!p"),
    ("~p", "!!~p"),
    ("!~~!!p", "!!~p"),
    ("!!~p", "!~~p"),
    ("!~~p", "!p"),
    ("!p", "~~!p"),
];

/// Covers added by the constants.
pub const CONSTANT_COVERS: [(&str, &str); 7] = [
    ("~~!!p", "1"),
    ("~~!p", "1"),
    ("0", "~!p"),
    ("0", "bot"),
    ("0", "~!!p"),
    ("bot", "!~~!p"),
    ("bot", "!~~!!p"),
];

/// Nodes with the order as index pairs `(a, b)` meaning `a ⪯ b`.
#[derive(Debug, Clone)]
pub struct Poset {
    pub nodes: Vec<PosetNode>,
    pub order: BTreeSet<(usize, usize)>,
    pub hasse: BTreeSet<(usize, usize)>,
}

/// The fifteen representatives, plus `0`, `bot`, `1` when requested.
/// Pairs involving a constant are decided by bounded search at the default
/// bound.
pub fn build_poset(include_constants: bool) -> Poset {
    Poset::from_words(representatives(), include_constants, SearchBound::default())
}

impl Poset {
    pub fn from_words(words: &[NWord], include_constants: bool, bound: SearchBound) -> Poset {
        let mut labels: Vec<NodeLabel> = words.iter().cloned().map(NodeLabel::Word).collect();
        if include_constants {
            labels.extend([NodeLabel::Zero, NodeLabel::Bot, NodeLabel::One]);
        }
        let nodes: Vec<PosetNode> = labels
            .into_iter()
            .map(|label| PosetNode {
                signature: Signature::of_formula(&label.to_formula()),
                label,
            })
            .collect();

        let pool = include_constants.then(|| ModelPool::new(bound, 1));
        let mut order = BTreeSet::new();
        for (i, a) in nodes.iter().enumerate() {
            for (j, b) in nodes.iter().enumerate() {
                let below = match (&a.label, &b.label, &pool) {
                    (NodeLabel::Word(x), NodeLabel::Word(y), _) => preceq(x, y),
                    (_, _, Some(pool)) => {
                        pool.is_valid(&Formula::imp(a.label.to_formula(), b.label.to_formula()))
                    }
                    (_, _, None) => unreachable!("constants only appear with a model pool"),
                };
                if below {
                    order.insert((i, j));
                }
            }
        }
        let hasse = cover_relation(nodes.len(), &order);
        Poset { nodes, order, hasse }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, label: &NodeLabel) -> Option<usize> {
        self.nodes.iter().position(|n| &n.label == label)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order.contains(&(a, b))
    }

    /// Cover pairs as labels, lower node first.
    pub fn labelled_covers(&self) -> Vec<(NodeLabel, NodeLabel)> {
        self.hasse
            .iter()
            .map(|&(a, b)| (self.nodes[a].label.clone(), self.nodes[b].label.clone()))
            .collect()
    }

    /// Longest chain of covers ending at each node.
    pub fn ranks(&self) -> Vec<usize> {
        let mut rank = vec![0usize; self.len()];
        // Repeated relaxation; the cover graph is acyclic.
        for _ in 0..self.len() {
            for &(a, b) in &self.hasse {
                rank[b] = rank[b].max(rank[a] + 1);
            }
        }
        rank
    }

    /// Constant-involving pairs where signature containment and bounded
    /// search disagree.
    pub fn constant_criterion_mismatches(&self) -> Vec<(NodeLabel, NodeLabel)> {
        let mut out = Vec::new();
        for (i, a) in self.nodes.iter().enumerate() {
            for (j, b) in self.nodes.iter().enumerate() {
                if !a.label.is_constant() && !b.label.is_constant() {
                    continue;
                }
                if a.signature.is_subset(&b.signature) != self.leq(i, j) {
                    out.push((a.label.clone(), b.label.clone()));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct NodeJson {
            label: String,
            signature: Signature,
        }
        #[derive(Serialize)]
        struct PosetJson {
            nodes: Vec<NodeJson>,
            covers: Vec<(String, String)>,
        }
        let doc = PosetJson {
            nodes: self
                .nodes
                .iter()
                .map(|n| NodeJson {
                    label: n.label.to_string(),
                    signature: n.signature,
                })
                .collect(),
            covers: self
                .labelled_covers()
                .into_iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("poset serializes")
    }
}

/// Strict pairs of `order` with no third element strictly between.
fn cover_relation(n: usize, order: &BTreeSet<(usize, usize)>) -> BTreeSet<(usize, usize)> {
    let lt = |a: usize, b: usize| a != b && order.contains(&(a, b));
    let mut out = BTreeSet::new();
    for &(a, b) in order {
        if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
            out.insert((a, b));
        }
    }
    out
}

pub fn hasse_edges(p: &Poset) -> BTreeSet<(usize, usize)> {
    p.hasse.clone()
}

/// Graphviz text: one node line per class, one undirected edge per cover,
/// nodes of equal rank grouped so the bottom is drawn lowest.
pub fn emit_dot(p: &Poset) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for (i, node) in p.nodes.iter().enumerate() {
        out.push_str(&format!("  n{i} [label=\"{}\"];\n", node.label.pretty()));
    }
    let mut by_rank: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, r) in p.ranks().into_iter().enumerate() {
        by_rank.entry(r).or_default().push(i);
    }
    for members in by_rank.values() {
        let names: Vec<String> = members.iter().map(|i| format!("n{i};")).collect();
        out.push_str(&format!("  {{ rank=same; {} }}\n", names.join(" ")));
    }
    for &(a, b) in &p.hasse {
        out.push_str(&format!("  n{a} -> n{b} [dir=none];\n"));
    }
    out.push_str("}\n");
    out
}
