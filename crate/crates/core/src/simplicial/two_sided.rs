//! Two-sided bar construction over the involution-fixed elements.

use crate::error::Error;
use crate::monoid::{element_tuples, TwistedMonoid};
use crate::simplicial::{Simplex, SimplicialSet};

/// Level `n` is `A^n x Fix`, payload `(a_1, ..., a_n, m)`. Faces act as in
/// the bar construction on the tuple part except the last, which feeds `a_n`
/// into the module slot through the twisted action `m -> a m tau(a)`.
#[derive(Clone)]
pub struct TwoSidedBar {
    monoid: TwistedMonoid,
    fixed: Vec<usize>,
    truncation: usize,
}

impl TwoSidedBar {
    pub fn new(monoid: TwistedMonoid, truncation: usize) -> Self {
        let fixed = monoid.fixed_points().members().to_vec();
        TwoSidedBar { monoid, fixed, truncation }
    }

    pub fn monoid(&self) -> &TwistedMonoid {
        &self.monoid
    }

    pub fn fixed_members(&self) -> &[usize] {
        &self.fixed
    }

    fn twisted(&self, a: usize, m: usize) -> usize {
        self.monoid.mul(self.monoid.mul(a, m), self.monoid.tau(a))
    }
}

impl SimplicialSet for TwoSidedBar {
    fn truncation(&self) -> usize {
        self.truncation
    }

    fn label(&self) -> String {
        format!("two_sided_bar({})", self.monoid.label())
    }

    fn payload_len(&self, n: usize) -> usize {
        n + 1
    }

    fn level(&self, n: usize) -> Result<Vec<Simplex>, Error> {
        if n > self.truncation {
            return Err(Error::Truncation { needed: n, available: self.truncation });
        }
        let mut out = Vec::new();
        for t in element_tuples(self.monoid.size(), n) {
            for &m in &self.fixed {
                let mut payload = t.clone();
                payload.push(m);
                out.push(Simplex::new(n, payload));
            }
        }
        Ok(out)
    }

    fn level_size(&self, n: usize) -> Option<u64> {
        (self.monoid.size() as u64)
            .checked_pow(n as u32)?
            .checked_mul(self.fixed.len() as u64)
    }

    fn face(&self, i: usize, x: &Simplex) -> Result<Simplex, Error> {
        let n = x.level();
        if n == 0 || i > n {
            return Err(Error::domain(format!("face {i} undefined at level {n}")));
        }
        let d = x.data();
        let mut out = Vec::with_capacity(n);
        if i == 0 {
            out.extend_from_slice(&d[1..]);
        } else if i == n {
            out.extend_from_slice(&d[..n - 1]);
            out.push(self.twisted(d[n - 1], d[n]));
        } else {
            out.extend_from_slice(&d[..i - 1]);
            out.push(self.monoid.mul(d[i - 1], d[i]));
            out.extend_from_slice(&d[i + 1..]);
        }
        Ok(Simplex::new(n - 1, out))
    }

    fn degeneracy(&self, j: usize, x: &Simplex) -> Result<Simplex, Error> {
        let n = x.level();
        if j > n {
            return Err(Error::domain(format!("degeneracy {j} undefined at level {n}")));
        }
        if n + 1 > self.truncation {
            return Err(Error::Truncation { needed: n + 1, available: self.truncation });
        }
        let mut out = x.data().to_vec();
        out.insert(j, self.monoid.unit());
        Ok(Simplex::new(n + 1, out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid;
    use crate::ordinal::OrdinalMap;
    use crate::simplicial::path_components;

    #[test]
    fn face_examples_in_s3() {
        let t = TwoSidedBar::new(monoid::symmetric_group_3().unwrap(), 3);
        let a12 = t.monoid().id_of("(12)").unwrap();
        let a13 = t.monoid().id_of("(13)").unwrap();
        let a23 = t.monoid().id_of("(23)").unwrap();
        let x = Simplex::new(1, vec![a12, a13]);
        assert_eq!(t.face(1, &x).unwrap(), Simplex::new(0, vec![a23]));
        assert_eq!(t.face(0, &x).unwrap(), Simplex::new(0, vec![a13]));
    }

    #[test]
    fn degeneracy_inserts_into_the_tuple_part() {
        let t = TwoSidedBar::new(monoid::cyclic_group(4).unwrap(), 3);
        let b = Simplex::new(0, vec![2]);
        assert_eq!(t.degeneracy(0, &b).unwrap(), Simplex::new(1, vec![0, 2]));
        let x = Simplex::new(1, vec![3, 2]);
        assert_eq!(t.degeneracy(1, &x).unwrap(), Simplex::new(2, vec![3, 0, 2]));
    }

    #[test]
    fn level_sizes() {
        let t = TwoSidedBar::new(monoid::cyclic_group(2).unwrap(), 4);
        let sizes: Vec<u64> = (0..=4).map(|n| t.level_size(n).unwrap()).collect();
        assert_eq!(sizes, vec![2, 4, 8, 16, 32]);
        assert_eq!(t.level(2).unwrap().len(), 8);

        let s3 = TwoSidedBar::new(monoid::symmetric_group_3().unwrap(), 2);
        assert_eq!(s3.level_size(2), Some(144));
    }

    /// Closed form for the action of `alpha: [m] -> [n]`: tuple entries are
    /// window products as in the bar construction, and the module slot
    /// absorbs the suffix past `alpha(m)` through the twisted action.
    fn window_products_with_module(
        t: &TwoSidedBar,
        alpha: &OrdinalMap,
        x: &Simplex,
    ) -> Simplex {
        let m = alpha.domain_top();
        let a = x.data();
        let n = x.level();
        let mut out: Vec<usize> = (1..=m)
            .map(|i| {
                (alpha.value(i - 1)..alpha.value(i))
                    .fold(t.monoid().unit(), |acc, j| t.monoid().mul(acc, a[j]))
            })
            .collect();
        let suffix = (alpha.value(m)..n).fold(t.monoid().unit(), |acc, j| {
            t.monoid().mul(acc, a[j])
        });
        out.push(t.twisted(suffix, a[n]));
        Simplex::new(m, out)
    }

    #[test]
    fn generic_action_matches_window_products() {
        for m in [
            monoid::cyclic_group(4).unwrap(),
            monoid::symmetric_group_3().unwrap(),
            monoid::boolean_monoid().unwrap(),
        ] {
            let deep = if m.size() > 4 { 2 } else { 3 };
            let t = TwoSidedBar::new(m, deep);
            for n in 0..=t.truncation() {
                for x in t.level(n).unwrap() {
                    for lo in 0..=t.truncation() {
                        for alpha in OrdinalMap::enumerate_all(lo, n) {
                            assert_eq!(
                                t.act(&alpha, &x).unwrap(),
                                window_products_with_module(&t, &alpha, &x),
                                "action of {alpha} on {x} in {}",
                                t.label()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn path_component_counts() {
        // conjugation is trivial on c4's fixed points: two components
        let c4 = TwoSidedBar::new(monoid::cyclic_group(4).unwrap(), 2);
        assert_eq!(path_components(&c4).unwrap(), 2);

        // the three transpositions are conjugate: {e} and one merged class
        let s3 = TwoSidedBar::new(monoid::symmetric_group_3().unwrap(), 2);
        assert_eq!(path_components(&s3).unwrap(), 2);

        // x e x = x joins the two vertices
        let b = TwoSidedBar::new(monoid::boolean_monoid().unwrap(), 2);
        assert_eq!(path_components(&b).unwrap(), 1);
    }
}
