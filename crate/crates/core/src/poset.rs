//! Materialized finite posets of placements: relation, Hasse diagram,
//! gradedness report and exports.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::kerov::{rank_general, rank_orthogonal};
use crate::order::RankMatrix;
use crate::roots::{enumerate_placements_capped, Kind, RookPlacement, DEFAULT_ENUMERATION_CAP};

/// Square bit relation over element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
struct BitRelation {
    size: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitRelation {
    fn new(size: usize) -> Self {
        let words = size.div_ceil(64).max(1);
        BitRelation {
            size,
            words,
            bits: vec![0; size * words],
        }
    }

    #[inline]
    fn set(&mut self, a: usize, b: usize) {
        self.bits[a * self.words + b / 64] |= 1 << (b % 64);
    }

    #[inline]
    fn get(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    fn row(&self, a: usize) -> &[u64] {
        &self.bits[a * self.words..(a + 1) * self.words]
    }

    fn transpose(&self) -> Self {
        let mut t = BitRelation::new(self.size);
        for a in 0..self.size {
            for b in 0..self.size {
                if self.get(a, b) {
                    t.set(b, a);
                }
            }
        }
        t
    }
}

/// A finite poset of rook placements.
#[derive(Debug, Clone)]
pub struct Poset {
    n: usize,
    kind: Kind,
    elements: Vec<RookPlacement>,
    index: HashMap<RookPlacement, usize>,
    /// `up.get(a, b)` iff `elements[a] <= elements[b]`.
    up: BitRelation,
    /// Hasse edges `(predecessor, successor)`, sorted.
    hasse: Vec<(usize, usize)>,
}

/// `R(n)` or `I(n)` with the rank-matrix order.
pub fn build_poset(n: usize, kind: Kind) -> Result<Poset> {
    build_poset_capped(n, kind, DEFAULT_ENUMERATION_CAP)
}

pub fn build_poset_capped(n: usize, kind: Kind, cap: u128) -> Result<Poset> {
    let elements = enumerate_placements_capped(n, kind, cap)?;
    let matrices: Vec<RankMatrix> = elements.iter().map(RankMatrix::of).collect();
    Ok(Poset::from_relation(n, kind, elements, |a, b| {
        matrices[a]
            .dominated_by(&matrices[b])
            .expect("same ambient n")
    }))
}

impl Poset {
    /// Materializes `leq(a, b)` over element indices and computes the Hasse diagram.
    /// `leq` must be a partial order; use [`Poset::check_partial_order`] to verify.
    pub fn from_relation(
        n: usize,
        kind: Kind,
        elements: Vec<RookPlacement>,
        leq: impl Fn(usize, usize) -> bool,
    ) -> Self {
        let size = elements.len();
        let mut up = BitRelation::new(size);
        for a in 0..size {
            for b in 0..size {
                if leq(a, b) {
                    up.set(a, b);
                }
            }
        }
        let index = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, e)| (e, k))
            .collect();
        let mut poset = Poset {
            n,
            kind,
            elements,
            index,
            up,
            hasse: Vec::new(),
        };
        poset.hasse = poset.transitive_reduction();
        poset
    }

    // T -> D is a cover iff the interval [T, D] has exactly two elements.
    fn transitive_reduction(&self) -> Vec<(usize, usize)> {
        let down = self.up.transpose();
        let mut edges = Vec::new();
        for t in 0..self.len() {
            for d in 0..self.len() {
                if t == d || !self.up.get(t, d) {
                    continue;
                }
                let interval: u32 = self
                    .up
                    .row(t)
                    .iter()
                    .zip(down.row(d))
                    .map(|(a, b)| (a & b).count_ones())
                    .sum();
                if interval == 2 {
                    edges.push((t, d));
                }
            }
        }
        edges
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[RookPlacement] {
        &self.elements
    }

    pub fn index_of(&self, d: &RookPlacement) -> Option<usize> {
        self.index.get(d).copied()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up.get(a, b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.up.get(a, b)
    }

    pub fn hasse(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    /// In-neighbours of `d` in the Hasse diagram.
    pub fn lower_covers(&self, d: usize) -> Vec<usize> {
        self.hasse
            .iter()
            .filter(|e| e.1 == d)
            .map(|e| e.0)
            .collect()
    }

    pub fn upper_covers(&self, t: usize) -> Vec<usize> {
        self.hasse
            .iter()
            .filter(|e| e.0 == t)
            .map(|e| e.1)
            .collect()
    }

    /// Reflexivity, antisymmetry and transitivity of the materialized relation.
    pub fn check_partial_order(&self) -> std::result::Result<(), String> {
        let size = self.len();
        for a in 0..size {
            if !self.leq(a, a) {
                return Err(format!("not reflexive at {}", self.elements[a]));
            }
            for b in 0..size {
                if a != b && self.leq(a, b) && self.leq(b, a) {
                    return Err(format!(
                        "not antisymmetric: {} and {}",
                        self.elements[a], self.elements[b]
                    ));
                }
                if !self.leq(a, b) {
                    continue;
                }
                for c in 0..size {
                    if self.leq(b, c) && !self.leq(a, c) {
                        return Err(format!(
                            "not transitive: {} <= {} <= {}",
                            self.elements[a], self.elements[b], self.elements[c]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Immediate predecessors of `d` straight from the definition: `T < D`
    /// with no `S` such that `T < S < D`.
    pub fn brute_force_covers(&self, d: &RookPlacement) -> Result<Vec<RookPlacement>> {
        let di = self
            .index_of(d)
            .ok_or_else(|| Error::NotAMember(d.to_string()))?;
        let size = self.len();
        let mut covers: Vec<RookPlacement> = (0..size)
            .filter(|&t| self.lt(t, di))
            .filter(|&t| !(0..size).any(|s| self.lt(t, s) && self.lt(s, di)))
            .map(|t| self.elements[t].clone())
            .collect();
        covers.sort_unstable();
        Ok(covers)
    }

    fn extremes(&self) -> (Vec<usize>, Vec<usize>) {
        let size = self.len();
        let minimal = (0..size)
            .filter(|&a| !(0..size).any(|b| self.lt(b, a)))
            .collect();
        let maximal = (0..size)
            .filter(|&a| !(0..size).any(|b| self.lt(a, b)))
            .collect();
        (minimal, maximal)
    }

    /// Kahn's algorithm over the Hasse diagram.
    fn topological_order(&self) -> Vec<usize> {
        let mut indegree = vec![0usize; self.len()];
        let mut succ = vec![Vec::new(); self.len()];
        for &(t, d) in &self.hasse {
            indegree[d] += 1;
            succ[t].push(d);
        }
        let mut queue: VecDeque<usize> = (0..self.len()).filter(|&a| indegree[a] == 0).collect();
        let mut order = Vec::with_capacity(self.len());
        while let Some(a) = queue.pop_front() {
            order.push(a);
            for &b in &succ[a] {
                indegree[b] -= 1;
                if indegree[b] == 0 {
                    queue.push_back(b);
                }
            }
        }
        order
    }

    /// Verifies gradedness: unique extrema, and every element reached from the
    /// minimum by Hasse paths of a single length. That length is the rank.
    pub fn check_graded(&self) -> GradedReport {
        let (minimal, maximal) = self.extremes();
        let name = |v: &[usize]| {
            v.iter()
                .map(|&k| self.elements[k].clone())
                .collect::<Vec<_>>()
        };
        let mut report = GradedReport {
            is_graded: false,
            min_element: None,
            max_element: None,
            minimal_elements: name(&minimal),
            maximal_elements: name(&maximal),
            rank_of: Vec::new(),
            max_chain_length: 0,
            witness: None,
            formula_checked: false,
            formula_mismatches: Vec::new(),
        };
        if minimal.len() != 1 {
            report.witness = Some(GradedWitness::NoUniqueMinimum(name(&minimal)));
            return report;
        }
        if maximal.len() != 1 {
            report.witness = Some(GradedWitness::NoUniqueMaximum(name(&maximal)));
            return report;
        }
        let (bottom, top) = (minimal[0], maximal[0]);
        report.min_element = Some(self.elements[bottom].clone());
        report.max_element = Some(self.elements[top].clone());

        // Shortest and longest distance from the bottom, with parents for witnesses.
        let size = self.len();
        let mut shortest = vec![usize::MAX; size];
        let mut longest = vec![0usize; size];
        let mut short_parent = vec![usize::MAX; size];
        let mut long_parent = vec![usize::MAX; size];
        shortest[bottom] = 0;
        let mut preds = vec![Vec::new(); size];
        for &(t, d) in &self.hasse {
            preds[d].push(t);
        }
        for a in self.topological_order() {
            for &t in &preds[a] {
                if shortest[t] + 1 < shortest[a] {
                    shortest[a] = shortest[t] + 1;
                    short_parent[a] = t;
                }
                if long_parent[a] == usize::MAX || longest[t] + 1 > longest[a] {
                    longest[a] = longest[t] + 1;
                    long_parent[a] = t;
                }
            }
        }
        report.max_chain_length = longest[top];

        if let Some(bad) = (0..size).find(|&a| shortest[a] != longest[a]) {
            let climb = |parents: &[usize]| {
                let mut chain = vec![bad];
                while let Some(&last) = chain.last() {
                    if parents[last] == usize::MAX {
                        break;
                    }
                    chain.push(parents[last]);
                }
                chain.reverse();
                chain
            };
            let mut tail = Vec::new();
            let mut cur = bad;
            while cur != top {
                cur = self.upper_covers(cur)[0];
                tail.push(cur);
            }
            let mut short = climb(&short_parent);
            let mut long = climb(&long_parent);
            short.extend(&tail);
            long.extend(&tail);
            report.witness = Some(GradedWitness::UnequalChains {
                shorter: name(&short),
                longer: name(&long),
            });
            return report;
        }

        report.is_graded = true;
        report.rank_of = shortest;
        self.cross_check_rank_formula(&mut report);
        report
    }

    fn cross_check_rank_formula(&self, report: &mut GradedReport) {
        let formula = |d: &RookPlacement| match self.kind {
            Kind::General => rank_general(d),
            Kind::Orthogonal => rank_orthogonal(d),
        };
        if self.kind == Kind::General && self.n < 2 {
            return;
        }
        report.formula_checked = true;
        for (k, d) in self.elements.iter().enumerate() {
            match formula(d) {
                Ok(rho) if rho == report.rank_of[k] => {}
                _ => report.formula_mismatches.push(d.clone()),
            }
        }
    }

    /// Graphviz digraph of the Hasse diagram, edges pointing upward.
    pub fn export_dot(&self, options: &DotOptions) -> String {
        let ranks = if options.rank_labels || options.rank_layers {
            let report = self.check_graded();
            report.is_graded.then_some(report.rank_of)
        } else {
            None
        };
        let title = match self.kind {
            Kind::General => format!("R({})", self.n),
            Kind::Orthogonal => format!("I({})", self.n),
        };
        let mut out = String::new();
        writeln!(out, "digraph \"{title}\" {{").unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
        for (k, d) in self.elements.iter().enumerate() {
            let mut label = if d.is_empty() {
                "{}".to_string()
            } else {
                d.to_string()
            };
            if let (true, Some(r)) = (options.rank_labels, &ranks) {
                write!(label, "\\nrank {}", r[k]).unwrap();
            }
            writeln!(out, "  \"p{k}\" [label=\"{label}\"];").unwrap();
        }
        for &(t, d) in &self.hasse {
            writeln!(out, "  \"p{t}\" -> \"p{d}\";").unwrap();
        }
        if let (true, Some(r)) = (options.rank_layers, &ranks) {
            let top = r.iter().copied().max().unwrap_or(0);
            for level in 0..=top {
                let ids: Vec<String> = (0..self.len())
                    .filter(|&k| r[k] == level)
                    .map(|k| format!("\"p{k}\";"))
                    .collect();
                writeln!(out, "  subgraph {{ rank=same; {} }}", ids.join(" ")).unwrap();
            }
        }
        out.push_str("}\n");
        out
    }

    /// `{"n", "kind", "elements", "hasse", "ranks"}`; `ranks` is null when the
    /// poset is not graded.
    pub fn to_json(&self) -> serde_json::Value {
        let report = self.check_graded();
        json!({
            "n": self.n,
            "kind": self.kind,
            "elements": self.elements.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "hasse": self.hasse.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
            "ranks": report.is_graded.then_some(report.rank_of),
        })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DotOptions {
    /// Append `rank k` to every node label.
    pub rank_labels: bool,
    /// Group nodes of equal rank with `rank=same` subgraphs.
    pub rank_layers: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum GradedWitness {
    NoUniqueMinimum(Vec<RookPlacement>),
    NoUniqueMaximum(Vec<RookPlacement>),
    /// Two maximal chains (bottom to top) of different lengths.
    UnequalChains {
        shorter: Vec<RookPlacement>,
        longer: Vec<RookPlacement>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedReport {
    pub is_graded: bool,
    pub min_element: Option<RookPlacement>,
    pub max_element: Option<RookPlacement>,
    pub minimal_elements: Vec<RookPlacement>,
    pub maximal_elements: Vec<RookPlacement>,
    /// Hasse distance from the minimum, indexed like `Poset::elements`; empty
    /// unless graded.
    pub rank_of: Vec<usize>,
    pub max_chain_length: usize,
    pub witness: Option<GradedWitness>,
    /// Whether ranks were compared with the closed-form rank function.
    pub formula_checked: bool,
    pub formula_mismatches: Vec<RookPlacement>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, pairs: &[(usize, usize)]) -> RookPlacement {
        RookPlacement::from_pairs(n, pairs).unwrap()
    }

    /// Lengths of all maximal chains, by exhaustive DFS over Hasse edges.
    fn all_maximal_chain_lengths(poset: &Poset) -> Vec<usize> {
        fn walk(poset: &Poset, a: usize, len: usize, out: &mut Vec<usize>) {
            let up = poset.upper_covers(a);
            if up.is_empty() {
                out.push(len);
            }
            for b in up {
                walk(poset, b, len + 1, out);
            }
        }
        let mut out = Vec::new();
        for a in 0..poset.len() {
            if poset.lower_covers(a).is_empty() {
                walk(poset, a, 0, &mut out);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    #[test]
    fn tiny_posets() {
        let r2 = build_poset(2, Kind::General).unwrap();
        assert_eq!(r2.len(), 2);
        assert_eq!(r2.hasse(), &[(0, 1)]);
        let report = r2.check_graded();
        assert!(report.is_graded);
        assert_eq!(report.max_chain_length, 1);

        assert_eq!(build_poset(3, Kind::General).unwrap().len(), 5);
        assert_eq!(build_poset(4, Kind::Orthogonal).unwrap().len(), 10);
    }

    #[test]
    fn brute_force_covers_small() {
        let r4 = build_poset(4, Kind::General).unwrap();
        assert!(r4
            .brute_force_covers(&RookPlacement::empty(4))
            .unwrap()
            .is_empty());
        let covers = r4.brute_force_covers(&p(4, &[(3, 1), (4, 2)])).unwrap();
        assert!(covers.contains(&p(4, &[(2, 1), (4, 2)])));
        assert!(matches!(
            r4.brute_force_covers(&p(5, &[(5, 1)])),
            Err(Error::NotAMember(_))
        ));
    }

    #[test]
    fn hasse_matches_definition_and_closure() {
        for (n, kind) in [
            (4, Kind::General),
            (5, Kind::General),
            (5, Kind::Orthogonal),
        ] {
            let poset = build_poset(n, kind).unwrap();
            poset.check_partial_order().unwrap();
            for (k, d) in poset.elements().iter().enumerate() {
                let mut from_hasse: Vec<RookPlacement> = poset
                    .lower_covers(k)
                    .into_iter()
                    .map(|t| poset.elements()[t].clone())
                    .collect();
                from_hasse.sort_unstable();
                assert_eq!(from_hasse, poset.brute_force_covers(d).unwrap());
            }
            // Transitive closure of the Hasse edges recovers the strict order.
            let size = poset.len();
            let mut reach = vec![vec![false; size]; size];
            for &(a, b) in poset.hasse() {
                reach[a][b] = true;
            }
            for k in 0..size {
                for a in 0..size {
                    if reach[a][k] {
                        for b in 0..size {
                            if reach[k][b] {
                                reach[a][b] = true;
                            }
                        }
                    }
                }
            }
            for a in 0..size {
                for b in 0..size {
                    assert_eq!(reach[a][b], poset.lt(a, b));
                }
            }
        }
    }

    #[test]
    fn chain_enumeration_agrees_with_dag_criterion() {
        for n in 2..=4 {
            for kind in [Kind::General, Kind::Orthogonal] {
                let poset = build_poset(n, kind).unwrap();
                let report = poset.check_graded();
                assert!(report.is_graded);
                assert_eq!(
                    all_maximal_chain_lengths(&poset),
                    vec![report.max_chain_length]
                );
            }
        }
    }

    #[test]
    fn non_graded_witness() {
        // Pentagon: 0 < 1 < 2 < 4 and 0 < 3 < 4.
        let elements: Vec<RookPlacement> = ["", "2,1", "3,1", "3,2", "2,1;3,2"]
            .iter()
            .map(|t| RookPlacement::parse(t, 3).unwrap())
            .collect();
        let less = [
            (0, 1),
            (1, 2),
            (0, 3),
            (2, 4),
            (3, 4),
            (0, 2),
            (0, 4),
            (1, 4),
        ];
        let poset = Poset::from_relation(3, Kind::General, elements, |a, b| {
            a == b || less.contains(&(a, b))
        });
        poset.check_partial_order().unwrap();
        let report = poset.check_graded();
        assert!(!report.is_graded);
        match report.witness {
            Some(GradedWitness::UnequalChains { shorter, longer }) => {
                assert_eq!(shorter.len(), 3);
                assert_eq!(longer.len(), 4);
            }
            other => panic!("unexpected witness {other:?}"),
        }

        // Two maximal elements.
        let elements: Vec<RookPlacement> = ["", "2,1", "3,2"]
            .iter()
            .map(|t| RookPlacement::parse(t, 3).unwrap())
            .collect();
        let poset = Poset::from_relation(3, Kind::General, elements, |a, b| a == b || a == 0);
        let report = poset.check_graded();
        assert!(
            matches!(report.witness, Some(GradedWitness::NoUniqueMaximum(ref v)) if v.len() == 2)
        );
    }

    #[test]
    fn dot_and_json() {
        let r2 = build_poset(2, Kind::General).unwrap();
        let dot = r2.export_dot(&DotOptions::default());
        assert_eq!(dot.matches("->").count(), 1);
        assert!(dot.starts_with("digraph \"R(2)\" {"));

        let i4 = build_poset(4, Kind::Orthogonal).unwrap();
        let dot = i4.export_dot(&DotOptions {
            rank_labels: true,
            rank_layers: true,
        });
        assert_eq!(dot.matches("rank=same").count(), 5);
        assert!(dot.contains("\"4,1;3,2\"") || dot.contains("3,2;4,1\\nrank 4"));

        let v = i4.to_json();
        assert_eq!(v["n"], 4);
        assert_eq!(v["kind"], "orthogonal");
        assert_eq!(v["elements"].as_array().unwrap().len(), 10);
        assert_eq!(v["hasse"].as_array().unwrap().len(), i4.hasse().len());
        assert_eq!(v["ranks"].as_array().unwrap().len(), 10);
    }
}
