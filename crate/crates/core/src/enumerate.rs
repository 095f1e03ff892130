//! The nine-context evaluation suite and bounded r-model enumeration.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::formula::Formula;
use crate::model::{validate_model, RModel, RawModel, WorldSet};

/// Column identifiers of the evaluation suite, in column order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ContextId {
    C0,
    C1,
    M00,
    M01,
    M11,
    V,
    I0,
    I1,
    I01,
}

impl ContextId {
    pub const ALL: [ContextId; 9] = [
        ContextId::C0,
        ContextId::C1,
        ContextId::M00,
        ContextId::M01,
        ContextId::M11,
        ContextId::V,
        ContextId::I0,
        ContextId::I1,
        ContextId::I01,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// ASCII id used in machine-readable output.
    pub fn id(self) -> &'static str {
        match self {
            ContextId::C0 => "c0",
            ContextId::C1 => "c1",
            ContextId::M00 => "m00",
            ContextId::M01 => "m01",
            ContextId::M11 => "m11",
            ContextId::V => "V",
            ContextId::I0 => "i0",
            ContextId::I1 => "i1",
            ContextId::I01 => "i01",
        }
    }

    /// Diagram label: `○` refutes p, `●` forces p, chains written top/bottom.
    pub fn pretty(self) -> &'static str {
        match self {
            ContextId::C0 => "○",
            ContextId::C1 => "●",
            ContextId::M00 => "○/○",
            ContextId::M01 => "●/○",
            ContextId::M11 => "●/●",
            ContextId::V => "V",
            ContextId::I0 => "i(○)",
            ContextId::I1 => "i(●)",
            ContextId::I01 => "i(○,●)",
        }
    }

    pub fn from_id(id: &str) -> Option<ContextId> {
        ContextId::ALL.into_iter().find(|c| c.id() == id)
    }

    pub fn is_pseudo(self) -> bool {
        matches!(self, ContextId::I0 | ContextId::I1 | ContextId::I01)
    }
}

impl fmt::Display for ContextId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone)]
pub struct EvalContext {
    pub id: ContextId,
    pub model: RModel,
}

/// Worlds, root, order pairs, worlds forcing p, pseudo flag.
type SuiteShape = (&'static [&'static str], Option<&'static str>, &'static [(&'static str, &'static str)], &'static [&'static str], bool);

fn suite_model(id: ContextId) -> RModel {
    let (worlds, root, order, forcing_p, pseudo): SuiteShape =
        match id {
            ContextId::C0 => (&["r"], Some("r"), &[], &[], false),
            ContextId::C1 => (&["r"], Some("r"), &[], &["r"], false),
            ContextId::M00 => (&["r", "t"], Some("r"), &[("r", "t")], &[], false),
            ContextId::M01 => (&["r", "t"], Some("r"), &[("r", "t")], &["t"], false),
            ContextId::M11 => (&["r", "t"], Some("r"), &[("r", "t")], &["r", "t"], false),
            ContextId::V => (&["a", "b", "r"], Some("r"), &[("r", "a"), ("r", "b")], &["b"], false),
            ContextId::I0 => (&["a"], None, &[], &[], true),
            ContextId::I1 => (&["b"], None, &[], &["b"], true),
            ContextId::I01 => (&["a", "b"], None, &[], &["b"], true),
        };
    let raw = RawModel {
        worlds: worlds.iter().map(|s| s.to_string()).collect(),
        root: root.map(str::to_string),
        order: order.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        valuation: forcing_p
            .iter()
            .map(|w| (w.to_string(), vec!["p".to_string()]))
            .collect(),
        pseudo,
        close: true,
    };
    validate_model(&raw).expect("suite models are well-formed")
}

/// The six canonical r-models followed by the three pseudosubmodels.
pub fn canonical_suite() -> &'static [EvalContext] {
    static SUITE: OnceLock<Vec<EvalContext>> = OnceLock::new();
    SUITE.get_or_init(|| {
        ContextId::ALL
            .into_iter()
            .map(|id| EvalContext {
                id,
                model: suite_model(id),
            })
            .collect()
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SearchBound {
    pub max_worlds: usize,
    /// Longest chain, counted in worlds; `None` is unbounded.
    pub max_height: Option<usize>,
}

impl SearchBound {
    pub fn new(max_worlds: usize, max_height: Option<usize>) -> Self {
        assert!(max_worlds >= 1, "a search bound needs at least one world");
        Self {
            max_worlds,
            max_height,
        }
    }
}

impl Default for SearchBound {
    /// Four worlds, height three.
    fn default() -> Self {
        Self::new(4, Some(3))
    }
}

impl fmt::Display for SearchBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.max_height {
            Some(h) => write!(f, "<= {} worlds, height <= {}", self.max_worlds, h),
            None => write!(f, "<= {} worlds", self.max_worlds),
        }
    }
}

/// Every rooted r-model with exactly `n` worlds and height at most
/// `max_height`, one per isomorphism class, in canonical-key order.
fn rmodels_of_size(n: usize, max_height: Option<usize>, num_vars: u32) -> Vec<RModel> {
    let mut found: BTreeMap<Vec<u64>, RModel> = BTreeMap::new();
    let names: Vec<String> = (0..n)
        .map(|i| if i == 0 { "r".to_string() } else { format!("w{i}") })
        .collect();
    // World k's strict down-set, built in an order that is a linear
    // extension: every world's predecessors carry smaller labels.
    let mut downs: Vec<WorldSet> = Vec::with_capacity(n);
    let mut depth: Vec<usize> = Vec::with_capacity(n);
    let mut posets: Vec<Vec<WorldSet>> = Vec::new();
    extend_poset(n, max_height, &mut downs, &mut depth, &mut posets);

    for downs in posets {
        let mut val = vec![0u32; n];
        for_each_valuation(&downs, num_vars, 0, &mut val, &mut |val| {
            let raw = RawModel {
                worlds: names.clone(),
                root: Some("r".to_string()),
                order: (0..n)
                    .flat_map(|v| downs[v].iter().map(move |u| (u, v)))
                    .map(|(u, v)| (names[u].clone(), names[v].clone()))
                    .collect(),
                valuation: (0..n)
                    .filter(|&u| val[u] != 0)
                    .map(|u| {
                        let vars = (0..num_vars)
                            .filter(|b| val[u] >> b & 1 == 1)
                            .map(|b| crate::model::variable_name(b + 1))
                            .collect();
                        (names[u].clone(), vars)
                    })
                    .collect(),
                pseudo: false,
                close: true,
            };
            let model = validate_model(&raw).expect("generated models are well-formed");
            found.entry(model.canonical_key()).or_insert(model);
        });
    }
    found.into_values().collect()
}

fn extend_poset(
    n: usize,
    max_height: Option<usize>,
    downs: &mut Vec<WorldSet>,
    depth: &mut Vec<usize>,
    out: &mut Vec<Vec<WorldSet>>,
) {
    let k = downs.len();
    if k == n {
        out.push(downs.clone());
        return;
    }
    if k == 0 {
        downs.push(WorldSet::EMPTY);
        depth.push(1);
        extend_poset(n, max_height, downs, depth, out);
        downs.pop();
        depth.pop();
        return;
    }
    // Candidate strict down-sets of world k: down-closed subsets of 0..k
    // containing the root.
    for bits in 0u64..1 << k {
        let set = WorldSet(bits);
        if !set.contains(0) {
            continue;
        }
        if !set.iter().all(|j| downs[j].is_subset(set)) {
            continue;
        }
        let d = 1 + set.iter().map(|j| depth[j]).max().unwrap_or(0);
        if max_height.is_some_and(|h| d > h) {
            continue;
        }
        downs.push(set);
        depth.push(d);
        extend_poset(n, max_height, downs, depth, out);
        downs.pop();
        depth.pop();
    }
}

/// Monotone valuations: each world's variables include those of every
/// world below it.
fn for_each_valuation(
    downs: &[WorldSet],
    num_vars: u32,
    k: usize,
    val: &mut Vec<u32>,
    visit: &mut dyn FnMut(&[u32]),
) {
    if k == downs.len() {
        visit(val);
        return;
    }
    let inherited = downs[k].iter().fold(0u32, |acc, j| acc | val[j]);
    for bits in 0u32..1 << num_vars {
        if bits & inherited == inherited {
            val[k] = bits;
            for_each_valuation(downs, num_vars, k + 1, val, visit);
        }
    }
}

/// All rooted r-models within `bound` over `num_vars` variables, up to
/// isomorphism, ordered by world count and then canonical key.
///
/// Only partial orders are produced; a cluster of mutually related worlds
/// forces exactly what a single world would.
pub fn enumerate_rmodels(bound: SearchBound, num_vars: u32) -> impl Iterator<Item = RModel> {
    assert!(num_vars >= 1, "enumeration needs at least one variable");
    (1..=bound.max_worlds).flat_map(move |n| rmodels_of_size(n, bound.max_height, num_vars))
}

/// A model and the world in it refuting a formula.
#[derive(Debug, Clone)]
pub struct Countermodel {
    pub model: RModel,
    pub world: String,
}

/// The first enumerated model (fewest worlds first) refuting `f`, and the
/// first refuting world in it. For r-models that world is the root.
pub fn find_countermodel(f: &Formula, bound: SearchBound) -> Option<Countermodel> {
    let num_vars = f.max_var().max(1);
    enumerate_rmodels(bound, num_vars).find_map(|model| refuting_world(&model, f).map(|u| {
        let world = model.worlds()[u].clone();
        Countermodel { model, world }
    }))
}

pub fn refuting_world(model: &RModel, f: &Formula) -> Option<usize> {
    let ext = model.extension(f);
    (0..model.len()).find(|&u| !ext.contains(u))
}

/// Bounded validity: no model within `bound` refutes `f`.
pub fn check_validity(f: &Formula, bound: SearchBound) -> bool {
    find_countermodel(f, bound).is_none()
}

/// A materialised enumeration, for callers that test many formulas against
/// the same bound.
#[derive(Debug, Clone)]
pub struct ModelPool {
    bound: SearchBound,
    models: Vec<RModel>,
}

impl ModelPool {
    pub fn new(bound: SearchBound, num_vars: u32) -> Self {
        Self {
            bound,
            models: enumerate_rmodels(bound, num_vars).collect(),
        }
    }

    pub fn bound(&self) -> SearchBound {
        self.bound
    }

    pub fn models(&self) -> &[RModel] {
        &self.models
    }

    pub fn find_countermodel(&self, f: &Formula) -> Option<(&RModel, usize)> {
        self.models
            .iter()
            .find_map(|m| refuting_world(m, f).map(|u| (m, u)))
    }

    pub fn is_valid(&self, f: &Formula) -> bool {
        self.models.iter().all(|m| m.valid_in(f))
    }
}
