//! JSON poset files: `{"n": int, "covers": [[i, j], ...], "labels": [..]}`.
//!
//! Serialization always writes the Hasse covers in lexicographic order with
//! fields in the order above, so that writing a parsed file reproduces the
//! bytes of any file this module wrote.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{FiniteJoinSemilattice, FiniteLattice};
use crate::poset::FinitePoset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetFile {
    pub n: usize,
    pub covers: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl PosetFile {
    pub fn from_poset(p: &FinitePoset) -> Self {
        PosetFile {
            n: p.len(),
            covers: p.covers().into_iter().map(|(a, b)| [a, b]).collect(),
            labels: p.labels().map(<[String]>::to_vec),
        }
    }

    pub fn to_poset(&self) -> Result<FinitePoset> {
        let pairs: Vec<(usize, usize)> = self.covers.iter().map(|&[a, b]| (a, b)).collect();
        let p = FinitePoset::from_cover_pairs(self.n, &pairs)?;
        match &self.labels {
            Some(l) => p.with_labels(l.clone()),
            None => Ok(p),
        }
    }
}

pub fn poset_to_json(p: &FinitePoset) -> String {
    serde_json::to_string(&PosetFile::from_poset(p)).expect("poset files always serialize")
}

pub fn poset_from_json(text: &str) -> Result<FinitePoset> {
    let file: PosetFile =
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("poset JSON: {e}")))?;
    file.to_poset()
}

pub fn lattice_from_json(text: &str) -> Result<FiniteLattice> {
    FiniteLattice::from_poset(poset_from_json(text)?).ok_or(Error::NotASemilattice("lattice"))
}

pub fn join_semilattice_from_json(text: &str) -> Result<FiniteJoinSemilattice> {
    FiniteJoinSemilattice::from_poset(poset_from_json(text)?)
        .ok_or(Error::NotASemilattice("join-semilattice"))
}
