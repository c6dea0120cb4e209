//! Finite partial orders stored as dense bitset rows.
//!
//! Element identity is the 0-based index. Row `up[i]` holds every `j` with
//! `i <= j`; `down[i]` is the transposed row, kept alongside so that both
//! principal downsets and principal upsets are a single word lookup.

use crate::bitset::{ElemSet, MAX_ELEMENTS};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    n: usize,
    up: Vec<ElemSet>,
    down: Vec<ElemSet>,
    labels: Option<Vec<String>>,
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_ELEMENTS {
        Err(Error::TooLarge { n })
    } else {
        Ok(())
    }
}

fn transpose(rows: &[ElemSet]) -> Vec<ElemSet> {
    let mut cols = vec![ElemSet::EMPTY; rows.len()];
    for (i, row) in rows.iter().enumerate() {
        for j in row.iter() {
            cols[j].insert(i);
        }
    }
    cols
}

impl FinitePoset {
    /// Reflexive-transitive closure of a list of cover (or any "below")
    /// pairs `(lower, upper)`.
    pub fn from_cover_pairs(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        check_size(n)?;
        let mut up: Vec<ElemSet> = (0..n).map(ElemSet::singleton).collect();
        for &(a, b) in covers {
            for index in [a, b] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            up[a].insert(b);
        }
        // Warshall over bitset rows.
        for k in 0..n {
            let row_k = up[k];
            for row in up.iter_mut() {
                if row.contains(k) {
                    *row = row.union(row_k);
                }
            }
        }
        for a in 0..n {
            for b in up[a].without(a).iter() {
                if up[b].contains(a) {
                    return Err(Error::CycleDetected { a, b });
                }
            }
        }
        let down = transpose(&up);
        Ok(FinitePoset {
            n,
            up,
            down,
            labels: None,
        })
    }

    /// Builds a poset from a full order predicate, validating the partial
    /// order axioms.
    pub fn from_relation(n: usize, le: impl Fn(usize, usize) -> bool) -> Result<Self> {
        check_size(n)?;
        let up: Vec<ElemSet> = (0..n)
            .map(|i| (0..n).filter(|&j| le(i, j)).collect())
            .collect();
        Self::from_up_rows(up)
    }

    /// Builds a poset from its rows `up[i] = { j : i <= j }`.
    pub fn from_up_rows(up: Vec<ElemSet>) -> Result<Self> {
        let n = up.len();
        check_size(n)?;
        for (i, row) in up.iter().enumerate() {
            if !row.is_subset(ElemSet::full(n)) {
                return Err(Error::NotAPartialOrder(format!(
                    "row {i} leaves the carrier"
                )));
            }
            if !row.contains(i) {
                return Err(Error::NotAPartialOrder(format!("{i} <= {i} fails")));
            }
            for j in row.without(i).iter() {
                if up[j].contains(i) {
                    return Err(Error::NotAPartialOrder(format!(
                        "{i} and {j} violate antisymmetry"
                    )));
                }
                if !up[j].is_subset(*row) {
                    return Err(Error::NotAPartialOrder(format!(
                        "transitivity fails through {i} <= {j}"
                    )));
                }
            }
        }
        let down = transpose(&up);
        Ok(FinitePoset {
            n,
            up,
            down,
            labels: None,
        })
    }

    pub fn chain(n: usize) -> Self {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_cover_pairs(n, &covers).expect("a chain is a valid poset")
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_cover_pairs(n, &[]).expect("an antichain is a valid poset")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Invalid(format!(
                "{} labels for {} elements",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of element `i`: its label, or the index.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(l) => l.iter().position(|s| s == label),
            None => label.parse().ok().filter(|&i| i < self.n),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn all(&self) -> ElemSet {
        ElemSet::full(self.n)
    }

    #[inline]
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.le(a, b)
    }

    /// `↑a`
    #[inline]
    pub fn up(&self, a: usize) -> ElemSet {
        self.up[a]
    }

    /// `↓a`
    #[inline]
    pub fn down(&self, a: usize) -> ElemSet {
        self.down[a]
    }

    pub fn up_rows(&self) -> &[ElemSet] {
        &self.up
    }

    /// Number of `true` entries of the order relation.
    pub fn relation_size(&self) -> usize {
        self.up.iter().map(|r| r.len()).sum()
    }

    /// Order dual: `a <= b` in the result iff `b <= a` here.
    pub fn dual(&self) -> Self {
        FinitePoset {
            n: self.n,
            up: self.down.clone(),
            down: self.up.clone(),
            labels: self.labels.clone(),
        }
    }

    /// Hasse diagram edges `(lower, upper)` in lexicographic order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            let strict = self.up[a].without(a);
            for b in strict.iter() {
                let between = strict.intersection(self.down[b].without(b));
                if between.is_empty() {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Elements covered by `a`.
    pub fn lower_covers(&self, a: usize) -> ElemSet {
        let strict = self.down[a].without(a);
        strict
            .iter()
            .filter(|&b| self.up[b].without(b).intersection(strict).is_empty())
            .collect()
    }

    pub fn minimal(&self) -> ElemSet {
        (0..self.n).filter(|&i| self.down[i].len() == 1).collect()
    }

    pub fn maximal(&self) -> ElemSet {
        (0..self.n).filter(|&i| self.up[i].len() == 1).collect()
    }

    /// Unique minimum, if any.
    pub fn bottom(&self) -> Option<usize> {
        (0..self.n).find(|&i| self.up[i] == self.all())
    }

    /// Unique maximum, if any.
    pub fn top(&self) -> Option<usize> {
        (0..self.n).find(|&i| self.down[i] == self.all())
    }

    pub fn is_antichain(&self) -> bool {
        self.up.iter().all(|r| r.len() == 1)
    }

    pub fn is_downset(&self, s: ElemSet) -> bool {
        s.iter().all(|i| self.down[i].is_subset(s))
    }

    pub fn is_upset(&self, s: ElemSet) -> bool {
        s.iter().all(|i| self.up[i].is_subset(s))
    }

    pub fn downset_closure(&self, s: ElemSet) -> ElemSet {
        s.iter()
            .fold(ElemSet::EMPTY, |acc, i| acc.union(self.down[i]))
    }

    pub fn upset_closure(&self, s: ElemSet) -> ElemSet {
        s.iter()
            .fold(ElemSet::EMPTY, |acc, i| acc.union(self.up[i]))
    }

    /// Common upper bounds of `s` (the whole carrier when `s` is empty).
    pub fn upper_bounds(&self, s: ElemSet) -> ElemSet {
        s.iter()
            .fold(self.all(), |acc, i| acc.intersection(self.up[i]))
    }

    pub fn lower_bounds(&self, s: ElemSet) -> ElemSet {
        s.iter()
            .fold(self.all(), |acc, i| acc.intersection(self.down[i]))
    }

    /// Least element of `s`, if `s` has one.
    pub fn least_of(&self, s: ElemSet) -> Option<usize> {
        s.iter().find(|&i| s.is_subset(self.up[i]))
    }

    pub fn greatest_of(&self, s: ElemSet) -> Option<usize> {
        s.iter().find(|&i| s.is_subset(self.down[i]))
    }

    /// Least upper bound of `s`, if it exists.
    pub fn supremum(&self, s: ElemSet) -> Option<usize> {
        self.least_of(self.upper_bounds(s))
    }

    /// Greatest lower bound of `s`, if it exists.
    pub fn infimum(&self, s: ElemSet) -> Option<usize> {
        self.greatest_of(self.lower_bounds(s))
    }

    /// Element indices sorted so that every element precedes everything
    /// strictly above it.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&i| (self.down[i].len(), i));
        order
    }

    /// Every downset, sorted by size and then by bit pattern.
    pub fn downsets(&self) -> Vec<ElemSet> {
        let order = self.linear_extension();
        let mut out = Vec::new();
        self.downsets_rec(&order, 0, ElemSet::EMPTY, &mut out);
        out.sort_by_key(|s| (s.len(), s.0));
        out
    }

    fn downsets_rec(&self, order: &[usize], k: usize, cur: ElemSet, out: &mut Vec<ElemSet>) {
        if k == order.len() {
            out.push(cur);
            return;
        }
        let x = order[k];
        self.downsets_rec(order, k + 1, cur, out);
        if self.down[x].without(x).is_subset(cur) {
            self.downsets_rec(order, k + 1, cur.with(x), out);
        }
    }

    /// Every upset, sorted by size and then by bit pattern.
    pub fn upsets(&self) -> Vec<ElemSet> {
        self.dual().downsets()
    }

    /// Restriction of the order to `s`, with `map[k]` the original index of
    /// the new element `k`.
    pub fn induced(&self, s: ElemSet) -> (FinitePoset, Vec<usize>) {
        let map: Vec<usize> = s.iter().collect();
        let up: Vec<ElemSet> = map
            .iter()
            .map(|&i| {
                map.iter()
                    .enumerate()
                    .filter(|&(_, &j)| self.le(i, j))
                    .map(|(k, _)| k)
                    .collect()
            })
            .collect();
        let down = transpose(&up);
        let labels = self
            .labels
            .as_ref()
            .map(|l| map.iter().map(|&i| l[i].clone()).collect());
        (
            FinitePoset {
                n: map.len(),
                up,
                down,
                labels,
            },
            map,
        )
    }

    /// Pulls the order back along a bijection: new element `k` is old
    /// element `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> FinitePoset {
        let mut inv = vec![0; self.n];
        for (k, &p) in perm.iter().enumerate() {
            inv[p] = k;
        }
        let up: Vec<ElemSet> = perm.iter().map(|&p| self.up[p].map_through(&inv)).collect();
        let down = transpose(&up);
        let labels = self
            .labels
            .as_ref()
            .map(|l| perm.iter().map(|&p| l[p].clone()).collect());
        FinitePoset {
            n: self.n,
            up,
            down,
            labels,
        }
    }

    /// Graphviz rendering of the Hasse diagram.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph hasse {\n  rankdir=BT;\n");
        for i in 0..self.n {
            s.push_str(&format!("  n{i} [label=\"{}\"];\n", self.label(i)));
        }
        for (a, b) in self.covers() {
            s.push_str(&format!("  n{a} -> n{b} [arrowhead=none];\n"));
        }
        s.push_str("}\n");
        s
    }
}
