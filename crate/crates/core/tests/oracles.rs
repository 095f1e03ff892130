//! Independent reimplementations checked against the library: a naive
//! recursive forcing relation over explicit order matrices, brute-force
//! model enumeration with permutation isomorphism, and the published table.

use std::collections::BTreeSet;

use iclneg::appendix::{printed_table, PRINTED_ROWS};
use iclneg::classify::REPRESENTATIVES;
use iclneg::{
    census, enumerate_rmodels, parse_nword, preceq, signature, Formula, NWord, RModel,
    SearchBound,
};

/// A model as plain data: `leq[u][v]` means u ≤ v.
#[derive(Clone, Debug)]
struct Naive {
    leq: Vec<Vec<bool>>,
    root: Option<usize>,
    p: Vec<bool>,
}

impl Naive {
    fn n(&self) -> usize {
        self.p.len()
    }

    fn imaginary(&self, u: usize) -> bool {
        self.root != Some(u)
    }

    fn forces(&self, u: usize, f: &Formula) -> bool {
        let above = |u: usize| (0..self.n()).filter(move |&v| self.leq[u][v]);
        match f {
            Formula::Var(1) => self.p[u],
            Formula::Var(_) => false,
            Formula::One => true,
            Formula::Zero => false,
            Formula::Bot => self.imaginary(u),
            Formula::And(a, b) => self.forces(u, a) && self.forces(u, b),
            Formula::Or(a, b) => self.forces(u, a) || self.forces(u, b),
            Formula::Imp(a, b) => above(u).all(|v| !self.forces(v, a) || self.forces(v, b)),
            Formula::IntNeg(a) => above(u).all(|v| !self.forces(v, a)),
            Formula::PerpNeg(a) => above(u).all(|v| self.imaginary(v) || !self.forces(v, a)),
        }
    }

    fn valid(&self, f: &Formula) -> bool {
        (0..self.n()).all(|u| self.forces(u, f))
    }

    fn from_model(m: &RModel) -> Naive {
        let n = m.len();
        Naive {
            leq: (0..n).map(|u| (0..n).map(|v| m.leq(u, v)).collect()).collect(),
            root: if m.is_pseudo() { None } else { m.root() },
            p: (0..n).map(|u| m.atom(1).contains(u)).collect(),
        }
    }

    fn height(&self) -> usize {
        fn longest(m: &Naive, u: usize) -> usize {
            1 + (0..m.n())
                .filter(|&v| v != u && m.leq[u][v])
                .map(|v| longest(m, v))
                .max()
                .unwrap_or(0)
        }
        (0..self.n()).map(|u| longest(self, u)).max().unwrap_or(0)
    }

    fn permuted(&self, perm: &[usize]) -> (Vec<Vec<bool>>, Vec<bool>) {
        let n = self.n();
        let mut leq = vec![vec![false; n]; n];
        let mut p = vec![false; n];
        for u in 0..n {
            p[perm[u]] = self.p[u];
            for v in 0..n {
                leq[perm[u]][perm[v]] = self.leq[u][v];
            }
        }
        (leq, p)
    }

    fn isomorphic(&self, other: &Naive) -> bool {
        if self.n() != other.n() || self.root.is_some() != other.root.is_some() {
            return false;
        }
        permutations(self.n())
            .iter()
            .any(|perm| self.permuted(perm) == (other.leq.clone(), other.p.clone()))
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for i in 0..=rest.len() {
            let mut v = rest.clone();
            v.insert(i, n - 1);
            out.push(v);
        }
    }
    out
}

/// Every rooted model on `n` worlds with root 0, up to isomorphism.
fn brute_force(n: usize) -> Vec<Naive> {
    let pairs: Vec<(usize, usize)> = (1..n)
        .flat_map(|a| (1..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let mut found: Vec<Naive> = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let mut leq = vec![vec![false; n]; n];
        for (u, row) in leq.iter_mut().enumerate() {
            row[u] = true;
        }
        leq[0] = vec![true; n];
        for (k, &(a, b)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                leq[a][b] = true;
            }
        }
        let transitive = (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| !(leq[a][b] && leq[b][c]) || leq[a][c]))
        });
        let antisymmetric = (0..n).all(|a| (0..n).all(|b| a == b || !(leq[a][b] && leq[b][a])));
        if !transitive || !antisymmetric {
            continue;
        }
        for val in 0u32..(1 << n) {
            let p: Vec<bool> = (0..n).map(|u| val >> u & 1 == 1).collect();
            let monotone = (0..n).all(|u| (0..n).all(|v| !(leq[u][v] && p[u]) || p[v]));
            if !monotone {
                continue;
            }
            let m = Naive {
                leq: leq.clone(),
                root: Some(0),
                p,
            };
            if !found.iter().any(|f| f.isomorphic(&m)) {
                found.push(m);
            }
        }
    }
    found
}

fn brute_force_bounded(max_worlds: usize, max_height: Option<usize>) -> Vec<Naive> {
    (1..=max_worlds)
        .flat_map(brute_force)
        .filter(|m| max_height.is_none_or(|h| m.height() <= h))
        .collect()
}

fn word(s: &str) -> NWord {
    parse_nword(s).unwrap()
}

#[test]
fn enumeration_counts_match_brute_force() {
    for (worlds, height, expected) in [
        (1, None, 2),
        (2, Some(2), 5),
        (3, Some(2), 9),
        (4, Some(3), 35),
        (4, Some(4), 40),
    ] {
        let brute = brute_force_bounded(worlds, height);
        assert_eq!(brute.len(), expected, "brute force at ({worlds}, {height:?})");
        let ours: Vec<Naive> = enumerate_rmodels(SearchBound::new(worlds, height), 1)
            .map(|m| Naive::from_model(&m))
            .collect();
        assert_eq!(ours.len(), expected, "enumeration at ({worlds}, {height:?})");
        for m in &brute {
            assert_eq!(ours.iter().filter(|o| o.isomorphic(m)).count(), 1);
        }
    }
}

#[test]
fn forcing_matches_naive_recursion() {
    let models: Vec<RModel> = enumerate_rmodels(SearchBound::new(4, None), 1).collect();
    let mut pseudo = Vec::new();
    for m in &models {
        if let Some(i) = m.imaginary_part() {
            pseudo.push(i);
        }
    }
    for m in models.iter().chain(&pseudo) {
        let naive = Naive::from_model(m);
        for w in NWord::all_up_to(6) {
            let f = w.to_formula();
            let ext = m.extension(&f);
            for u in 0..m.len() {
                assert_eq!(ext.contains(u), naive.forces(u, &f), "{w} at {u} in {}", m.to_json());
            }
        }
        for text in ["bot", "p -> bot", "~p | !p", "(p -> 0) & 1", "!(bot -> p)"] {
            let f = iclneg::parse_formula(text).unwrap();
            for u in 0..m.len() {
                assert_eq!(m.extension(&f).contains(u), naive.forces(u, &f));
            }
        }
    }
}

/// The nine contexts, built by hand.
fn hand_suite() -> Vec<Naive> {
    let chain = |bottom: bool, top: bool| Naive {
        leq: vec![vec![true, true], vec![false, true]],
        root: Some(0),
        p: vec![bottom, top],
    };
    vec![
        Naive { leq: vec![vec![true]], root: Some(0), p: vec![false] },
        Naive { leq: vec![vec![true]], root: Some(0), p: vec![true] },
        chain(false, false),
        chain(false, true),
        chain(true, true),
        Naive {
            leq: vec![vec![true, true, true], vec![false, true, false], vec![false, false, true]],
            root: Some(0),
            p: vec![false, false, true],
        },
        Naive { leq: vec![vec![true]], root: None, p: vec![false] },
        Naive { leq: vec![vec![true]], root: None, p: vec![true] },
        Naive { leq: vec![vec![true, false], vec![false, true]], root: None, p: vec![false, true] },
    ]
}

#[test]
fn signatures_match_hand_built_suite() {
    let suite = hand_suite();
    for w in NWord::all_up_to(8) {
        let f = w.to_formula();
        let naive: Vec<bool> = suite.iter().map(|m| m.valid(&f)).collect();
        assert_eq!(signature(&w).0.to_vec(), naive, "{w}");
    }
}

#[test]
fn preceq_matches_brute_force_validity() {
    let models = brute_force_bounded(4, None);
    let words: Vec<NWord> = NWord::all_up_to(4).collect();
    for a in &words {
        for b in &words {
            let f = Formula::imp(a.to_formula(), b.to_formula());
            let naive = models.iter().all(|m| m.forces(0, &f));
            assert_eq!(preceq(a, b), naive, "{a} -> {b}");
        }
    }
}

#[test]
fn printed_table_agrees_off_the_errata() {
    let printed = printed_table();
    assert_eq!(printed.len(), 63);
    let mut differing = BTreeSet::new();
    for (w, row) in &printed {
        let computed = signature(w);
        for c in 0..9 {
            if row.0[c] != computed.0[c] {
                differing.insert((w.to_string(), c));
            }
        }
    }
    let mut expected: BTreeSet<(String, usize)> = (0..6).map(|c| ("!!!!!p".to_string(), c)).collect();
    expected.insert(("p".to_string(), 8));
    assert_eq!(differing, expected);
    // The printed fifth-power row repeats the fourth-power row.
    assert_eq!(PRINTED_ROWS[62].1, PRINTED_ROWS[30].1);
}

#[test]
fn published_rows_from_the_text() {
    assert_eq!(signature(&word("~!p")).to_string(), "-+-------");
    assert_eq!(signature(&word("!~p")).to_string(), "-+-++++++");
    assert_eq!(signature(&word("~~!p")).to_string(), "+-+++++++");
    assert_eq!(signature(&word("~!~p")).to_string(), "+--------");
}

#[test]
fn census_names_the_published_representatives() {
    let published = [
        "p", "~p", "!p", "~~p", "~!p", "!~p", "!!p", "~~!p", "~!!p", "!~~p", "!!~p", "~~!!p",
        "!~~!p", "!!~~p", "!~~!!p",
    ];
    assert_eq!(REPRESENTATIVES, published);
    let reps: Vec<String> = census(7).iter().map(|c| c.representative.to_string()).collect();
    assert_eq!(reps, published);
}

#[test]
fn length_three_classes() {
    let classes = census(3);
    let three: Vec<String> = classes
        .iter()
        .filter(|c| c.representative.len() == 3)
        .map(|c| c.representative.to_string())
        .collect();
    assert_eq!(three, ["~~!p", "~!!p", "!~~p", "!!~p"]);
}
