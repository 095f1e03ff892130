//! Finite Kripke r-models, pseudosubmodels and the forcing relation.
//!
//! Worlds are identified by strings and stored in sorted order, so world
//! index `i` is the `i`-th identifier in lexicographic order. The order
//! relation is kept as its reflexive-transitive closure, one up-set bitmask
//! per world; forcing is computed as the set of worlds where a formula holds.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formula::{Formula, NWord, NegKind};

/// Upper limit on worlds per model (one bit per world).
pub const MAX_WORLDS: usize = 64;

/// A set of worlds of one model, as a bitmask over world indices.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WorldSet(pub u64);

impl WorldSet {
    pub const EMPTY: WorldSet = WorldSet(0);

    pub fn singleton(u: usize) -> Self {
        WorldSet(1 << u)
    }

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            WorldSet(u64::MAX)
        } else {
            WorldSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, u: usize) -> bool {
        self.0 >> u & 1 == 1
    }

    pub fn insert(&mut self, u: usize) {
        self.0 |= 1 << u;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: WorldSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&u| self.contains(u))
    }
}

impl std::ops::BitAnd for WorldSet {
    type Output = WorldSet;
    fn bitand(self, rhs: WorldSet) -> WorldSet {
        WorldSet(self.0 & rhs.0)
    }
}

impl std::ops::BitOr for WorldSet {
    type Output = WorldSet;
    fn bitor(self, rhs: WorldSet) -> WorldSet {
        WorldSet(self.0 | rhs.0)
    }
}

impl std::ops::Not for WorldSet {
    type Output = WorldSet;
    fn not(self) -> WorldSet {
        WorldSet(!self.0)
    }
}

/// Model description as read from and written to JSON.
///
/// `order` lists pairs `[u, v]` meaning `u <= v`; it is closed under
/// reflexivity and transitivity unless `close` is set to `false`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawModel {
    pub worlds: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<String>,
    #[serde(default)]
    pub order: Vec<(String, String)>,
    #[serde(default)]
    pub valuation: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub pseudo: bool,
    #[serde(default = "default_true", skip_serializing_if = "is_true")]
    pub close: bool,
}

fn default_true() -> bool {
    true
}

fn is_true(b: &bool) -> bool {
    *b
}

impl RawModel {
    pub fn from_json(text: &str) -> Result<RawModel> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("raw models always serialize")
    }

    pub fn validate(&self) -> std::result::Result<RModel, Vec<ModelDefect>> {
        validate_model(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DefectKind {
    EmptyWorldSet,
    TooManyWorlds,
    DuplicateWorld,
    UnknownWorld,
    UnknownVariable,
    NotReflexive,
    NotTransitive,
    NoLeastRoot,
    RootInPseudoModel,
    NonMonotoneValuation,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Witness {
    None,
    World(String),
    Pair(String, String),
    Name(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ModelDefect {
    pub kind: DefectKind,
    pub witness: Witness,
}

impl ModelDefect {
    fn new(kind: DefectKind, witness: Witness) -> Self {
        Self { kind, witness }
    }
}

impl fmt::Display for ModelDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use DefectKind::*;
        match (&self.kind, &self.witness) {
            (EmptyWorldSet, _) => write!(f, "the model has no worlds"),
            (TooManyWorlds, _) => write!(f, "more than {MAX_WORLDS} worlds"),
            (DuplicateWorld, w) => write!(f, "duplicate world {w}"),
            (UnknownWorld, w) => write!(f, "reference to undeclared world {w}"),
            (UnknownVariable, w) => write!(f, "unrecognised variable name {w}"),
            (NotReflexive, w) => write!(f, "order is not reflexive at {w}"),
            (NotTransitive, w) => write!(f, "order is not transitive: missing {w}"),
            (NoLeastRoot, Witness::None) => write!(f, "rooted model without a root"),
            (NoLeastRoot, w) => write!(f, "root is not the unique least world: {w}"),
            (RootInPseudoModel, w) => write!(f, "pseudosubmodel declares a root {w}"),
            (NonMonotoneValuation, w) => write!(f, "valuation is not monotone along {w}"),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::None => write!(f, "-"),
            Witness::World(w) | Witness::Name(w) => write!(f, "'{w}'"),
            Witness::Pair(u, v) => write!(f, "'{u}' <= '{v}'"),
        }
    }
}

/// Parses `p`, `p1`, `p2`, ... into a variable index.
pub fn variable_index(name: &str) -> Option<u32> {
    let digits = name.strip_prefix('p')?;
    if digits.is_empty() {
        return Some(1);
    }
    if digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

pub fn variable_name(index: u32) -> String {
    if index == 1 {
        "p".to_string()
    } else {
        format!("p{index}")
    }
}

/// A validated finite Kripke model: either an r-model (with a least root)
/// or a pseudosubmodel in which every world is imaginary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RModel {
    worlds: Vec<String>,
    up: Vec<WorldSet>,
    root: Option<usize>,
    valuation: BTreeMap<u32, WorldSet>,
    pseudo: bool,
}

/// Checks a raw description and closes its order. All defects are reported.
pub fn validate_model(raw: &RawModel) -> std::result::Result<RModel, Vec<ModelDefect>> {
    use DefectKind::*;
    let mut defects = Vec::new();
    if raw.worlds.is_empty() {
        return Err(vec![ModelDefect::new(EmptyWorldSet, Witness::None)]);
    }
    let sorted: BTreeSet<&String> = raw.worlds.iter().collect();
    if sorted.len() != raw.worlds.len() {
        let mut seen = BTreeSet::new();
        for w in &raw.worlds {
            if !seen.insert(w) {
                defects.push(ModelDefect::new(DuplicateWorld, Witness::World(w.clone())));
            }
        }
    }
    if sorted.len() > MAX_WORLDS {
        defects.push(ModelDefect::new(TooManyWorlds, Witness::None));
        return Err(defects);
    }
    let worlds: Vec<String> = sorted.into_iter().cloned().collect();
    let n = worlds.len();
    let index = |id: &str| worlds.binary_search_by(|w| w.as_str().cmp(id)).ok();

    let mut up = vec![WorldSet::EMPTY; n];
    for (a, b) in &raw.order {
        match (index(a), index(b)) {
            (Some(i), Some(j)) => up[i].insert(j),
            (ia, ib) => {
                for (id, found) in [(a, ia), (b, ib)] {
                    if found.is_none() {
                        defects.push(ModelDefect::new(UnknownWorld, Witness::World(id.clone())));
                    }
                }
            }
        }
    }
    if raw.close {
        close_preorder(&mut up);
    } else {
        for u in 0..n {
            if !up[u].contains(u) {
                defects.push(ModelDefect::new(NotReflexive, Witness::World(worlds[u].clone())));
            }
        }
        for u in 0..n {
            for v in up[u].iter().filter(|&v| v != u) {
                for w in up[v].iter() {
                    if !up[u].contains(w) {
                        defects.push(ModelDefect::new(
                            NotTransitive,
                            Witness::Pair(worlds[u].clone(), worlds[w].clone()),
                        ));
                    }
                }
            }
        }
        defects.dedup();
        close_preorder(&mut up);
    }

    let root = match (&raw.root, raw.pseudo) {
        (Some(r), true) => {
            defects.push(ModelDefect::new(RootInPseudoModel, Witness::World(r.clone())));
            None
        }
        (None, true) => None,
        (None, false) => {
            defects.push(ModelDefect::new(NoLeastRoot, Witness::None));
            None
        }
        (Some(r), false) => match index(r) {
            None => {
                defects.push(ModelDefect::new(UnknownWorld, Witness::World(r.clone())));
                None
            }
            Some(ri) => {
                for u in 0..n {
                    let below_root = up[u].contains(ri) && u != ri;
                    if !up[ri].contains(u) || below_root {
                        defects.push(ModelDefect::new(
                            NoLeastRoot,
                            Witness::World(worlds[u].clone()),
                        ));
                    }
                }
                Some(ri)
            }
        },
    };

    let mut valuation: BTreeMap<u32, WorldSet> = BTreeMap::new();
    for (world, vars) in &raw.valuation {
        let Some(u) = index(world) else {
            defects.push(ModelDefect::new(UnknownWorld, Witness::World(world.clone())));
            continue;
        };
        for var in vars {
            match variable_index(var) {
                Some(i) => valuation.entry(i).or_default().insert(u),
                None => defects.push(ModelDefect::new(UnknownVariable, Witness::Name(var.clone()))),
            }
        }
    }
    for set in valuation.values() {
        for u in set.iter() {
            for v in up[u].iter() {
                if !set.contains(v) {
                    let defect = ModelDefect::new(
                        NonMonotoneValuation,
                        Witness::Pair(worlds[u].clone(), worlds[v].clone()),
                    );
                    if !defects.contains(&defect) {
                        defects.push(defect);
                    }
                }
            }
        }
    }

    if defects.is_empty() {
        Ok(RModel {
            worlds,
            up,
            root,
            valuation,
            pseudo: raw.pseudo,
        })
    } else {
        Err(defects)
    }
}

/// Reflexive-transitive closure in place (Warshall over bitmasks).
fn close_preorder(up: &mut [WorldSet]) {
    let n = up.len();
    for (u, set) in up.iter_mut().enumerate() {
        set.insert(u);
    }
    for k in 0..n {
        for u in 0..n {
            if up[u].contains(k) {
                up[u] = up[u] | up[k];
            }
        }
    }
}

impl RModel {
    /// Builds a model from already-closed parts. Callers guarantee the
    /// invariants that [`validate_model`] checks.
    pub(crate) fn from_parts(
        worlds: Vec<String>,
        up: Vec<WorldSet>,
        root: Option<usize>,
        valuation: BTreeMap<u32, WorldSet>,
        pseudo: bool,
    ) -> Self {
        debug_assert!(worlds.windows(2).all(|w| w[0] < w[1]));
        let valuation = valuation.into_iter().filter(|(_, s)| !s.is_empty()).collect();
        RModel {
            worlds,
            up,
            root,
            valuation,
            pseudo,
        }
    }

    pub fn worlds(&self) -> &[String] {
        &self.worlds
    }

    pub fn len(&self) -> usize {
        self.worlds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.worlds.is_empty()
    }

    pub fn is_pseudo(&self) -> bool {
        self.pseudo
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn root_id(&self) -> Option<&str> {
        self.root.map(|r| self.worlds[r].as_str())
    }

    pub fn world_index(&self, id: &str) -> Option<usize> {
        self.worlds.binary_search_by(|w| w.as_str().cmp(id)).ok()
    }

    fn require(&self, id: &str) -> Result<usize> {
        self.world_index(id)
            .ok_or_else(|| Error::UnknownWorld(id.to_string()))
    }

    pub fn all_worlds(&self) -> WorldSet {
        WorldSet::full(self.len())
    }

    /// `{v : u <= v}`.
    pub fn up_set(&self, u: usize) -> WorldSet {
        self.up[u]
    }

    pub fn leq(&self, u: usize, v: usize) -> bool {
        self.up[u].contains(v)
    }

    /// Imaginary worlds force `bot`: every world of a pseudosubmodel, and
    /// every non-root world of an r-model.
    pub fn is_imaginary(&self, u: usize) -> bool {
        self.pseudo || self.root != Some(u)
    }

    pub fn imaginary_worlds(&self) -> WorldSet {
        match (self.pseudo, self.root) {
            (false, Some(r)) => WorldSet(self.all_worlds().0 & !(1u64 << r)),
            _ => self.all_worlds(),
        }
    }

    /// Worlds where variable `index` is true.
    pub fn atom(&self, index: u32) -> WorldSet {
        self.valuation.get(&index).copied().unwrap_or_default()
    }

    /// Variables forced at `u`.
    pub fn atoms_at(&self, u: usize) -> BTreeSet<u32> {
        self.valuation
            .iter()
            .filter(|(_, s)| s.contains(u))
            .map(|(&i, _)| i)
            .collect()
    }

    pub fn max_var(&self) -> u32 {
        self.valuation.keys().next_back().copied().unwrap_or(0)
    }

    /// Worlds whose whole up-set lies in `allowed`.
    fn box_of(&self, allowed: WorldSet) -> WorldSet {
        let mut out = WorldSet::EMPTY;
        for u in 0..self.len() {
            if self.up[u].is_subset(allowed) {
                out.insert(u);
            }
        }
        out
    }

    /// Worlds forcing `kind · A`, given the worlds forcing `A`.
    pub fn negate_extension(&self, kind: NegKind, ext: WorldSet) -> WorldSet {
        match kind {
            NegKind::Int => self.box_of(!ext),
            NegKind::Perp => self.box_of(!ext | self.imaginary_worlds()),
        }
    }

    /// The set of worlds forcing `f`.
    pub fn extension(&self, f: &Formula) -> WorldSet {
        let all = self.all_worlds();
        match f {
            Formula::Var(i) => self.atom(*i),
            Formula::Zero => WorldSet::EMPTY,
            Formula::One => all,
            Formula::Bot => self.imaginary_worlds(),
            Formula::IntNeg(a) => self.negate_extension(NegKind::Int, self.extension(a)),
            Formula::PerpNeg(a) => self.negate_extension(NegKind::Perp, self.extension(a)),
            Formula::And(a, b) => self.extension(a) & self.extension(b),
            Formula::Or(a, b) => self.extension(a) | self.extension(b),
            Formula::Imp(a, b) => self.box_of(!self.extension(a) | self.extension(b)),
        }
    }

    /// The set of worlds forcing the word applied to `p`.
    pub fn word_extension(&self, w: &NWord) -> WorldSet {
        w.negs()
            .iter()
            .rev()
            .fold(self.atom(1), |ext, &k| self.negate_extension(k, ext))
    }

    pub fn forces(&self, world: &str, f: &Formula) -> Result<bool> {
        let u = self.require(world)?;
        Ok(self.forces_at(u, f))
    }

    pub fn forces_at(&self, u: usize, f: &Formula) -> bool {
        self.extension(f).contains(u)
    }

    /// Forced at every world.
    pub fn valid_in(&self, f: &Formula) -> bool {
        self.extension(f) == self.all_worlds()
    }

    pub fn word_valid(&self, w: &NWord) -> bool {
        self.word_extension(w) == self.all_worlds()
    }

    /// Restriction to the worlds in `keep`, re-indexed in sorted order.
    fn restrict(&self, keep: WorldSet, root: Option<usize>, pseudo: bool) -> RModel {
        let old: Vec<usize> = keep.iter().filter(|&u| u < self.len()).collect();
        let new_index = |u: usize| old.iter().position(|&x| x == u);
        let remap = |s: WorldSet| {
            let mut out = WorldSet::EMPTY;
            for (i, &u) in old.iter().enumerate() {
                if s.contains(u) {
                    out.insert(i);
                }
            }
            out
        };
        RModel::from_parts(
            old.iter().map(|&u| self.worlds[u].clone()).collect(),
            old.iter().map(|&u| remap(self.up[u])).collect(),
            root.and_then(new_index),
            self.valuation.iter().map(|(&i, &s)| (i, remap(s))).collect(),
            pseudo,
        )
    }

    /// The submodel generated by `world`: its up-set, pseudo exactly when
    /// `world` is imaginary, otherwise rooted at `world`.
    pub fn generated_submodel(&self, world: &str) -> Result<RModel> {
        let u = self.require(world)?;
        Ok(self.generated_at(u))
    }

    pub fn generated_at(&self, u: usize) -> RModel {
        if self.is_imaginary(u) {
            self.restrict(self.up[u], None, true)
        } else {
            self.restrict(self.up[u], Some(u), false)
        }
    }

    /// The pseudosubmodel of all worlds strictly above the root; `None` for
    /// a one-world r-model or for a model that is already pseudo.
    pub fn imaginary_part(&self) -> Option<RModel> {
        let r = self.root.filter(|_| !self.pseudo)?;
        let above = WorldSet(self.up[r].0 & !(1u64 << r));
        if above.is_empty() {
            return None;
        }
        Some(self.restrict(above, None, true))
    }

    /// Number of worlds on a longest strict chain.
    pub fn height(&self) -> usize {
        let n = self.len();
        let mut memo = vec![0usize; n];
        fn go(m: &RModel, u: usize, memo: &mut [usize]) -> usize {
            if memo[u] > 0 {
                return memo[u];
            }
            let best = m.up[u]
                .iter()
                .filter(|&v| !m.up[v].contains(u))
                .map(|v| go(m, v, memo))
                .max()
                .unwrap_or(0);
            memo[u] = best + 1;
            memo[u]
        }
        (0..n).map(|u| go(self, u, &mut memo)).max().unwrap_or(0)
    }

    /// Pairs `u < v` with nothing strictly in between, plus pairs inside
    /// clusters.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let strict = |u: usize, v: usize| self.leq(u, v) && !self.leq(v, u);
        let mut out = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u == v || !self.leq(u, v) {
                    continue;
                }
                if !strict(u, v) || !(0..n).any(|w| strict(u, w) && strict(w, v)) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn to_raw(&self) -> RawModel {
        let order = self
            .covers()
            .into_iter()
            .map(|(u, v)| (self.worlds[u].clone(), self.worlds[v].clone()))
            .collect();
        let mut valuation = BTreeMap::new();
        for (u, id) in self.worlds.iter().enumerate() {
            let vars: Vec<String> = self.atoms_at(u).into_iter().map(variable_name).collect();
            if !vars.is_empty() {
                valuation.insert(id.clone(), vars);
            }
        }
        RawModel {
            worlds: self.worlds.clone(),
            root: self.root_id().map(str::to_string),
            order,
            valuation,
            pseudo: self.pseudo,
            close: true,
        }
    }

    pub fn to_json(&self) -> String {
        self.to_raw().to_json()
    }

    /// A key equal for two models exactly when they are isomorphic.
    ///
    /// Worlds are first sorted by an isomorphism invariant; the least
    /// encoding over all orderings that respect the invariant is the key.
    pub fn canonical_key(&self) -> Vec<u64> {
        let n = self.len();
        let vars: Vec<u32> = self.valuation.keys().copied().collect();
        let down_size = |u: usize| (0..n).filter(|&v| self.leq(v, u)).count() as u64;
        let invariant = |u: usize| {
            let val_bits = vars
                .iter()
                .enumerate()
                .filter(|(_, &i)| self.atom(i).contains(u))
                .fold(0u64, |acc, (k, _)| acc | 1 << k);
            (
                u64::from(self.root != Some(u)),
                down_size(u),
                self.up[u].len() as u64,
                val_bits,
            )
        };
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&u| invariant(u));
        let mut blocks: Vec<(usize, usize)> = Vec::new();
        let mut start = 0;
        for i in 1..=n {
            if i == n || invariant(order[i]) != invariant(order[start]) {
                blocks.push((start, i));
                start = i;
            }
        }

        let encode = |order: &[usize]| {
            let mut pos = vec![0usize; n];
            for (i, &u) in order.iter().enumerate() {
                pos[u] = i;
            }
            let relabel = |s: WorldSet| s.iter().fold(0u64, |acc, v| acc | 1 << pos[v]);
            let mut key = vec![n as u64, u64::from(self.pseudo), u64::from(self.root.is_some())];
            key.extend(order.iter().map(|&u| relabel(self.up[u])));
            for &i in &vars {
                key.push(u64::from(i));
                key.push(relabel(self.atom(i)));
            }
            key
        };

        let mut best: Option<Vec<u64>> = None;
        permute_blocks(&mut order, &blocks, 0, &mut |o| {
            let key = encode(o);
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        });
        best.unwrap_or_else(|| encode(&order))
    }

    pub fn is_isomorphic(&self, other: &RModel) -> bool {
        self.len() == other.len() && self.canonical_key() == other.canonical_key()
    }
}

/// Visits every ordering obtained by permuting within each block.
fn permute_blocks(
    order: &mut Vec<usize>,
    blocks: &[(usize, usize)],
    b: usize,
    visit: &mut dyn FnMut(&[usize]),
) {
    if b == blocks.len() {
        visit(order);
        return;
    }
    let (lo, hi) = blocks[b];
    heap_permute(order, lo, hi - lo, &mut |o| permute_blocks(o, blocks, b + 1, visit));
}

/// Heap's algorithm over `order[lo..lo + k]`.
fn heap_permute(order: &mut Vec<usize>, lo: usize, k: usize, visit: &mut dyn FnMut(&mut Vec<usize>)) {
    if k <= 1 {
        visit(order);
        return;
    }
    heap_permute(order, lo, k - 1, visit);
    for i in 0..k - 1 {
        let j = if k.is_multiple_of(2) { lo + i } else { lo };
        order.swap(j, lo + k - 1);
        heap_permute(order, lo, k - 1, visit);
    }
}
