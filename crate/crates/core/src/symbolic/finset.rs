use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Finite,
    Cofinite,
}

/// A finite or cofinite set of naturals. `support` is the set itself when
/// finite and its complement when cofinite, so every set has exactly one
/// representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawFinOrCofin")]
pub struct FinOrCofin {
    kind: Kind,
    support: BTreeSet<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFinOrCofin {
    kind: Kind,
    support: Vec<u64>,
}

impl TryFrom<RawFinOrCofin> for FinOrCofin {
    type Error = String;

    fn try_from(raw: RawFinOrCofin) -> Result<Self, String> {
        if raw.support.windows(2).any(|w| w[0] >= w[1]) {
            return Err("support must be strictly increasing".into());
        }
        Ok(FinOrCofin {
            kind: raw.kind,
            support: raw.support.into_iter().collect(),
        })
    }
}

impl FinOrCofin {
    pub fn finite(elems: impl IntoIterator<Item = u64>) -> Self {
        FinOrCofin {
            kind: Kind::Finite,
            support: elems.into_iter().collect(),
        }
    }

    /// `ℕ ∖ missing`.
    pub fn cofinite(missing: impl IntoIterator<Item = u64>) -> Self {
        FinOrCofin {
            kind: Kind::Cofinite,
            support: missing.into_iter().collect(),
        }
    }

    pub fn empty() -> Self {
        Self::finite([])
    }

    pub fn naturals() -> Self {
        Self::cofinite([])
    }

    /// `{n : n >= k}`.
    pub fn at_least(k: u64) -> Self {
        Self::cofinite(0..k)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn support(&self) -> &BTreeSet<u64> {
        &self.support
    }

    pub fn is_finite(&self) -> bool {
        self.kind == Kind::Finite
    }

    pub fn is_empty(&self) -> bool {
        self.is_finite() && self.support.is_empty()
    }

    pub fn contains(&self, n: u64) -> bool {
        self.support.contains(&n) == self.is_finite()
    }

    pub fn complement(&self) -> Self {
        FinOrCofin {
            kind: match self.kind {
                Kind::Finite => Kind::Cofinite,
                Kind::Cofinite => Kind::Finite,
            },
            support: self.support.clone(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        use Kind::*;
        let (s, o) = (&self.support, &other.support);
        match (self.kind, other.kind) {
            (Finite, Finite) => Self::finite(s.union(o).copied()),
            (Finite, Cofinite) => Self::cofinite(o.difference(s).copied()),
            (Cofinite, Finite) => Self::cofinite(s.difference(o).copied()),
            (Cofinite, Cofinite) => Self::cofinite(s.intersection(o).copied()),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.complement().union(&other.complement()).complement()
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.intersection(&other.complement())
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    /// Bits 0..3 mark which of `0, 1, 2` belong to the set.
    pub fn trace(&self) -> u8 {
        (0..3)
            .filter(|&i| self.contains(i))
            .fold(0, |t, i| t | 1 << i)
    }

    /// Least element `>= k`, if any.
    pub fn least_at_least(&self, k: u64) -> Option<u64> {
        match self.kind {
            Kind::Finite => self.support.range(k..).next().copied(),
            Kind::Cofinite => (k..).find(|n| !self.support.contains(n)),
        }
    }

    pub fn least(&self) -> Option<u64> {
        self.least_at_least(0)
    }

    pub fn with(&self, n: u64) -> Self {
        self.union(&Self::finite([n]))
    }

    pub fn without(&self, n: u64) -> Self {
        self.difference(&Self::finite([n]))
    }

    /// Membership of `0..n` as a bit vector, `n <= 64`.
    pub fn truncate(&self, n: u32) -> u64 {
        (0..u64::from(n))
            .filter(|&i| self.contains(i))
            .fold(0, |m, i| m | 1 << i)
    }
}

impl fmt::Display for FinOrCofin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.support.iter().map(u64::to_string).collect();
        match self.kind {
            Kind::Finite => write!(f, "{{{}}}", items.join(",")),
            Kind::Cofinite if items.is_empty() => write!(f, "ℕ"),
            Kind::Cofinite => write!(f, "ℕ∖{{{}}}", items.join(",")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const N: u32 = 64;

    fn fin_or_cofin() -> impl Strategy<Value = FinOrCofin> {
        (any::<bool>(), prop::collection::btree_set(0u64..40, 0..8)).prop_map(|(fin, s)| {
            if fin {
                FinOrCofin::finite(s)
            } else {
                FinOrCofin::cofinite(s)
            }
        })
    }

    #[test]
    fn examples() {
        let u = FinOrCofin::finite([1, 2]).union(&FinOrCofin::finite([0]));
        assert_eq!(u, FinOrCofin::finite([0, 1, 2]));
        let c = FinOrCofin::finite([0, 1, 2]).complement();
        assert_eq!(c.kind(), Kind::Cofinite);
        assert_eq!(
            c.support().iter().copied().collect::<Vec<_>>(),
            vec![0, 1, 2]
        );
        let i = FinOrCofin::cofinite([0]).intersection(&FinOrCofin::finite([0, 1, 2]));
        assert_eq!(i, FinOrCofin::finite([1, 2]));
        assert_eq!(i.truncate(11), 0b110);
    }

    #[test]
    fn json_shape() {
        let s = FinOrCofin::cofinite([3, 7]);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"kind":"cofinite","support":[3,7]}"#);
        assert_eq!(serde_json::from_str::<FinOrCofin>(&text).unwrap(), s);
        assert!(
            serde_json::from_str::<FinOrCofin>(r#"{"kind":"finite","support":[2,1]}"#).is_err()
        );
        assert!(
            serde_json::from_str::<FinOrCofin>(r#"{"kind":"finite","support":[1,1]}"#).is_err()
        );
    }

    #[test]
    fn least_elements() {
        assert_eq!(FinOrCofin::cofinite([0, 1, 3]).least(), Some(2));
        assert_eq!(FinOrCofin::cofinite([0, 1, 3]).least_at_least(3), Some(4));
        assert_eq!(FinOrCofin::finite([5]).least_at_least(6), None);
        assert_eq!(FinOrCofin::empty().least(), None);
    }

    proptest! {
        #[test]
        fn boolean_ops_match_bit_vectors(a in fin_or_cofin(), b in fin_or_cofin()) {
            let (ma, mb) = (a.truncate(N), b.truncate(N));
            prop_assert_eq!(a.union(&b).truncate(N), ma | mb);
            prop_assert_eq!(a.intersection(&b).truncate(N), ma & mb);
            prop_assert_eq!(a.complement().truncate(N), !ma);
            prop_assert_eq!(a.difference(&b).truncate(N), ma & !mb);
            prop_assert_eq!(a.is_subset(&b), ma & !mb == 0);
        }

        #[test]
        fn de_morgan_and_absorption(a in fin_or_cofin(), b in fin_or_cofin()) {
            prop_assert_eq!(
                a.union(&b).complement(),
                a.complement().intersection(&b.complement())
            );
            prop_assert_eq!(a.union(&a.intersection(&b)), a.clone());
            prop_assert_eq!(a.intersection(&a.union(&b)), a.clone());
            prop_assert_eq!(a.complement().complement(), a);
        }

        #[test]
        fn results_are_canonical(a in fin_or_cofin(), b in fin_or_cofin()) {
            // Equal truncations far past every support element mean equal sets.
            let u = a.union(&b);
            let rebuilt = if u.is_finite() {
                FinOrCofin::finite((0..64).filter(|&i| u.contains(i)))
            } else {
                FinOrCofin::cofinite((0..64).filter(|&i| !u.contains(i)))
            };
            prop_assert_eq!(u, rebuilt);
        }
    }
}
