//! Edgewise subdivision: level `q` re-reads level `2q+1` of the inner
//! complex, and an ordinal map acts through its symmetric double.

use crate::error::Error;
use crate::ordinal::OrdinalMap;
use crate::simplicial::{InvolutiveSimplicialSet, Simplex, SimplicialSet};

#[derive(Clone)]
pub struct Edgewise<S: SimplicialSet> {
    inner: S,
}

impl<S: SimplicialSet> Edgewise<S> {
    /// The inner complex must carry at least level 1 so that level 0 exists.
    pub fn new(inner: S) -> Result<Self, Error> {
        if inner.truncation() < 1 {
            return Err(Error::Truncation { needed: 1, available: inner.truncation() });
        }
        Ok(Edgewise { inner })
    }

    pub fn inner(&self) -> &S {
        &self.inner
    }

    fn to_inner(&self, x: &Simplex) -> Simplex {
        Simplex::new(2 * x.level() + 1, x.data().to_vec())
    }

    fn lift_inner(&self, x: Simplex) -> Result<Simplex, Error> {
        let level = x.level();
        if level.is_multiple_of(2) {
            return Err(Error::invariant(format!(
                "subdivision produced an even inner level {level}"
            )));
        }
        Ok(Simplex::new((level - 1) / 2, x.into_data()))
    }
}

impl<S: SimplicialSet> SimplicialSet for Edgewise<S> {
    fn truncation(&self) -> usize {
        (self.inner.truncation() - 1) / 2
    }

    fn label(&self) -> String {
        format!("edgewise({})", self.inner.label())
    }

    fn payload_len(&self, n: usize) -> usize {
        self.inner.payload_len(2 * n + 1)
    }

    fn level(&self, n: usize) -> Result<Vec<Simplex>, Error> {
        if n > self.truncation() {
            return Err(Error::Truncation { needed: n, available: self.truncation() });
        }
        Ok(self
            .inner
            .level(2 * n + 1)?
            .into_iter()
            .map(Simplex::into_data)
            .map(|d| Simplex::new(n, d))
            .collect())
    }

    fn level_size(&self, n: usize) -> Option<u64> {
        self.inner.level_size(2 * n + 1)
    }

    fn face(&self, i: usize, x: &Simplex) -> Result<Simplex, Error> {
        let n = x.level();
        if n == 0 || i > n {
            return Err(Error::domain(format!("face {i} undefined at level {n}")));
        }
        self.act(&OrdinalMap::coface(i, n), x)
    }

    fn degeneracy(&self, j: usize, x: &Simplex) -> Result<Simplex, Error> {
        let n = x.level();
        if j > n {
            return Err(Error::domain(format!("degeneracy {j} undefined at level {n}")));
        }
        if n + 1 > self.truncation() {
            return Err(Error::Truncation { needed: n + 1, available: self.truncation() });
        }
        self.act(&OrdinalMap::codegeneracy(j, n), x)
    }

    fn act(&self, alpha: &OrdinalMap, x: &Simplex) -> Result<Simplex, Error> {
        if alpha.codomain_top() != x.level() {
            return Err(Error::dim(format!(
                "map into [{}] cannot act on a level-{} simplex",
                alpha.codomain_top(),
                x.level()
            )));
        }
        let moved = self.inner.act(&alpha.double(), &self.to_inner(x))?;
        self.lift_inner(moved)
    }
}

impl<S: InvolutiveSimplicialSet> InvolutiveSimplicialSet for Edgewise<S> {
    fn involution(&self, x: &Simplex) -> Result<Simplex, Error> {
        let moved = self.inner.involution(&self.to_inner(x))?;
        self.lift_inner(moved)
    }
}
