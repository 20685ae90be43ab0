use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex identifier. Generators use 1-based labels; file I/O canonicalizes to 0-based.
pub type Vertex = u32;

/// A simplex stored as its strictly increasing vertex list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    /// Sorts the input; rejects repeated vertices.
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Self> {
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        Ok(Simplex(vertices))
    }

    /// Builds from an already strictly increasing list.
    pub(crate) fn from_sorted(vertices: Vec<Vertex>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|vertices| - 1`; the empty simplex has dimension -1.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Simplex) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.by_ref().any(|w| w == v))
    }

    pub fn intersection(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|&v| other.contains(v)).collect())
    }

    pub fn intersection_len(&self, other: &Simplex) -> usize {
        self.0.iter().filter(|&&v| other.contains(v)).count()
    }

    pub fn without(&self, v: Vertex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    pub fn with(&self, v: Vertex) -> Simplex {
        let mut vs = self.0.clone();
        if let Err(pos) = vs.binary_search(&v) {
            vs.insert(pos, v);
        }
        Simplex(vs)
    }

    /// Codimension-one faces, each obtained by dropping one vertex, in the order of the dropped vertex.
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        self.0.iter().map(move |&v| self.without(v))
    }

    pub fn map<F: FnMut(Vertex) -> Vertex>(&self, f: F) -> Result<Simplex> {
        Simplex::new(self.0.iter().copied().map(f).collect())
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vertex> {
        self.0.iter()
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl TryFrom<Vec<Vertex>> for Simplex {
    type Error = Error;

    fn try_from(value: Vec<Vertex>) -> Result<Self> {
        Simplex::new(value)
    }
}

impl From<Simplex> for Vec<Vertex> {
    fn from(value: Simplex) -> Self {
        value.0
    }
}

impl<'a> IntoIterator for &'a Simplex {
    type Item = &'a Vertex;
    type IntoIter = std::slice::Iter<'a, Vertex>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Shorthand for literal simplices in tests and generators. Panics on duplicates.
#[macro_export]
macro_rules! simplex {
    ($($v:expr),* $(,)?) => {
        $crate::complex::Simplex::new(vec![$($v),*]).expect("literal simplex has distinct vertices")
    };
}
