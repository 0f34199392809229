//! Truncated simplicial sets with explicit levels.
//!
//! A [`SimplicialSet`] carries finitely many levels `0 ..= truncation()`,
//! enumerable per level, with face and degeneracy operators on payload-backed
//! [`Simplex`] values. Arbitrary ordinal maps act through the epi-mono
//! factorization, so implementors only supply the elementary operators.
//! [`InvolutiveSimplicialSet`] adds a levelwise involution.

pub mod bar;
pub mod diagonal;
pub mod edgewise;
pub mod fixed;
pub mod maps;
pub mod product;
pub mod table;
pub mod two_sided;
pub mod verify;

pub use bar::BarSigma;
pub use edgewise::Edgewise;
pub use fixed::FixedBar;
pub use maps::eta;
pub use two_sided::TwoSidedBar;

use crate::error::Error;
use crate::ordinal::OrdinalMap;

/// A simplex as a level together with its payload slots. What the payload
/// means is up to the owning complex; equality is payload equality at equal
/// level, which is the right notion inside a single complex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Simplex {
    level: usize,
    data: Vec<usize>,
}

impl Simplex {
    pub fn new(level: usize, data: Vec<usize>) -> Self {
        Simplex { level, data }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn data(&self) -> &[usize] {
        &self.data
    }

    pub fn into_data(self) -> Vec<usize> {
        self.data
    }
}

impl std::fmt::Display for Simplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.data.iter().map(|v| v.to_string()).collect();
        write!(f, "({})@{}", parts.join(","), self.level)
    }
}

pub trait SimplicialSet {
    /// Levels `0 ..= truncation()` are available; asking beyond must fail
    /// with a truncation error rather than a guess.
    fn truncation(&self) -> usize;

    fn label(&self) -> String;

    /// Payload slots a level-`n` simplex carries.
    fn payload_len(&self, n: usize) -> usize;

    /// Every simplex at level `n`, in a deterministic order.
    fn level(&self, n: usize) -> Result<Vec<Simplex>, Error>;

    /// `d_i`, dropping vertex `i` of a level `n >= 1` simplex, `0 <= i <= n`.
    fn face(&self, i: usize, x: &Simplex) -> Result<Simplex, Error>;

    /// `s_j`, repeating vertex `j`, `0 <= j <= n`. The result sits one level
    /// up, so the source must sit strictly below the truncation.
    fn degeneracy(&self, j: usize, x: &Simplex) -> Result<Simplex, Error>;

    /// Number of simplices at level `n` if it fits in a `u64`. The default
    /// materializes the level; implementors with closed forms override.
    fn level_size(&self, n: usize) -> Option<u64> {
        self.level(n).ok().map(|v| v.len() as u64)
    }

    /// Contravariant action of `alpha: [m] -> [n]` on a level-`n` simplex:
    /// faces for the missed values from the largest down, then degeneracies
    /// for the collapse positions from the smallest up.
    fn act(&self, alpha: &OrdinalMap, x: &Simplex) -> Result<Simplex, Error> {
        if alpha.codomain_top() != x.level() {
            return Err(Error::dim(format!(
                "map into [{}] cannot act on a level-{} simplex",
                alpha.codomain_top(),
                x.level()
            )));
        }
        let f = alpha.factorize();
        let mut y = x.clone();
        for &i in f.faces.iter().rev() {
            y = self.face(i, &y)?;
        }
        for &j in &f.degeneracies {
            y = self.degeneracy(j, &y)?;
        }
        Ok(y)
    }

    /// A simplex is degenerate exactly when `s_j d_j` fixes it for some `j`.
    fn is_degenerate(&self, x: &Simplex) -> Result<bool, Error> {
        for j in 0..x.level() {
            if self.degeneracy(j, &self.face(j, x)?)? == *x {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Components of the level-0/level-1 graph: vertices are the level-0
/// simplices, and each 1-simplex `x` contributes the edge `(d_1 x, d_0 x)`.
pub fn path_components<S: SimplicialSet + ?Sized>(s: &S) -> Result<usize, Error> {
    let vertices = s.level(0)?;
    let index_of = |v: &Simplex| vertices.iter().position(|w| w == v);
    let mut edges = Vec::new();
    for x in s.level(1)? {
        let tail = s.face(1, &x)?;
        let head = s.face(0, &x)?;
        match (index_of(&tail), index_of(&head)) {
            (Some(a), Some(b)) => edges.push((a, b)),
            _ => {
                return Err(Error::invariant(format!(
                    "face of {x} is not a listed vertex"
                )))
            }
        }
    }
    Ok(crate::homology::component_count(vertices.len(), &edges))
}

pub trait InvolutiveSimplicialSet: SimplicialSet {
    /// The levelwise involution.
    fn involution(&self, x: &Simplex) -> Result<Simplex, Error>;

    /// Simplices at level `n` fixed by the involution. The default filters
    /// the whole level; implementors with a direct description override.
    fn fixed_level(&self, n: usize) -> Result<Vec<Simplex>, Error> {
        let mut out = Vec::new();
        for x in self.level(n)? {
            if self.involution(&x)? == x {
                out.push(x);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Monotone paths into `[1]`: level `n` holds the weakly increasing
    /// 0/1 strings of length `n + 1`, with faces deleting and degeneracies
    /// repeating a slot. The ordinal action has a closed form, namely
    /// precomposition, which pins down the factorization-based default.
    struct Interval {
        truncation: usize,
    }

    impl SimplicialSet for Interval {
        fn truncation(&self) -> usize {
            self.truncation
        }

        fn label(&self) -> String {
            "interval".to_string()
        }

        fn payload_len(&self, n: usize) -> usize {
            n + 1
        }

        fn level(&self, n: usize) -> Result<Vec<Simplex>, Error> {
            if n > self.truncation {
                return Err(Error::Truncation { needed: n, available: self.truncation });
            }
            Ok((0..=n + 1)
                .map(|ones| {
                    let data = (0..=n).map(|p| usize::from(p + ones > n)).collect();
                    Simplex::new(n, data)
                })
                .collect())
        }

        fn face(&self, i: usize, x: &Simplex) -> Result<Simplex, Error> {
            let mut data = x.data().to_vec();
            data.remove(i);
            Ok(Simplex::new(x.level() - 1, data))
        }

        fn degeneracy(&self, j: usize, x: &Simplex) -> Result<Simplex, Error> {
            let mut data = x.data().to_vec();
            data.insert(j, data[j]);
            Ok(Simplex::new(x.level() + 1, data))
        }
    }

    fn as_ordinal(x: &Simplex) -> OrdinalMap {
        OrdinalMap::new(1, x.data().to_vec()).unwrap()
    }

    #[test]
    fn levels_enumerate_monotone_strings() {
        let s = Interval { truncation: 3 };
        assert_eq!(s.level(0).unwrap().len(), 2);
        assert_eq!(s.level(2).unwrap().len(), 4);
        assert_eq!(s.level_size(2), Some(4));
        assert!(s.level(4).is_err());
    }

    #[test]
    fn default_action_is_precomposition() {
        let s = Interval { truncation: 4 };
        for n in 0..=3usize {
            for x in s.level(n).unwrap() {
                for m in 0..=4usize {
                    for alpha in OrdinalMap::enumerate_all(m, n) {
                        let via_ops = s.act(&alpha, &x).unwrap();
                        let direct = as_ordinal(&x).compose(&alpha).unwrap();
                        assert_eq!(
                            as_ordinal(&via_ops),
                            direct,
                            "action of {alpha} on {x} disagrees with precomposition"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn identity_acts_trivially() {
        let s = Interval { truncation: 2 };
        for n in 0..=2 {
            for x in s.level(n).unwrap() {
                assert_eq!(s.act(&OrdinalMap::identity(n), &x).unwrap(), x);
            }
        }
    }

    #[test]
    fn action_rejects_level_mismatch() {
        let s = Interval { truncation: 2 };
        let x = s.level(2).unwrap()[0].clone();
        assert!(s.act(&OrdinalMap::identity(1), &x).is_err());
    }

    #[test]
    fn degeneracy_detection() {
        let s = Interval { truncation: 3 };
        // (0,1) is the nondegenerate edge, (0,0) and (1,1) are degenerate
        let edges = s.level(1).unwrap();
        let flags: Vec<bool> = edges.iter().map(|x| s.is_degenerate(x).unwrap()).collect();
        assert_eq!(flags.iter().filter(|&&b| b).count(), 2);
        let nondeg = edges.iter().find(|x| !s.is_degenerate(x).unwrap()).unwrap();
        assert_eq!(nondeg.data(), &[0, 1]);

        // vertices are never degenerate
        for v in s.level(0).unwrap() {
            assert!(!s.is_degenerate(&v).unwrap());
        }
    }
}
