//! Diagonal of the double bar construction of a commutative monoid, in both
//! operator orders, and the certificate that the orders agree.

use crate::cert::Certificate;
use crate::error::Error;
use crate::monoid::{element_tuples, TwistedMonoid};
use crate::par;
use crate::simplicial::{Simplex, SimplicialSet};

/// Level `n` holds the `n x n` grids over the monoid, flattened row-major.
/// Rows form an outer bar tuple over the componentwise monoid; each row is
/// an inner bar tuple. A diagonal face applies the outer (horizontal) and
/// inner (vertical) face of the same index, in the order picked at
/// construction; commutativity of the monoid makes the orders agree.
pub struct DiagonalBar {
    monoid: TwistedMonoid,
    truncation: usize,
    horizontal_first: bool,
}

impl DiagonalBar {
    pub fn new(
        monoid: TwistedMonoid,
        truncation: usize,
        horizontal_first: bool,
    ) -> Result<Self, Error> {
        if !monoid.is_commutative() {
            return Err(Error::unsupported(format!(
                "{} is not commutative, so its bar levels are not monoids",
                monoid.label()
            )));
        }
        Ok(DiagonalBar { monoid, truncation, horizontal_first })
    }

    pub fn monoid(&self) -> &TwistedMonoid {
        &self.monoid
    }

    fn rows(x: &Simplex) -> Vec<Vec<usize>> {
        let n = x.level();
        (0..n).map(|r| x.data()[r * n..(r + 1) * n].to_vec()).collect()
    }

    fn flatten(level: usize, rows: Vec<Vec<usize>>) -> Simplex {
        Simplex::new(level, rows.into_iter().flatten().collect())
    }

    /// Outer bar face on the list of rows; entries multiply componentwise.
    fn horizontal_face(&self, i: usize, rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let n = rows.len();
        if i == 0 {
            rows[1..].to_vec()
        } else if i == n {
            rows[..n - 1].to_vec()
        } else {
            let mut out = rows[..i - 1].to_vec();
            let merged = rows[i - 1]
                .iter()
                .zip(&rows[i])
                .map(|(&a, &b)| self.monoid.mul(a, b))
                .collect();
            out.push(merged);
            out.extend_from_slice(&rows[i + 1..]);
            out
        }
    }

    /// Inner bar face applied within every row.
    fn vertical_face(&self, i: usize, rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
        rows.iter()
            .map(|row| {
                let n = row.len();
                if i == 0 {
                    row[1..].to_vec()
                } else if i == n {
                    row[..n - 1].to_vec()
                } else {
                    let mut out = row[..i - 1].to_vec();
                    out.push(self.monoid.mul(row[i - 1], row[i]));
                    out.extend_from_slice(&row[i + 1..]);
                    out
                }
            })
            .collect()
    }

    fn horizontal_degeneracy(&self, j: usize, rows: &[Vec<usize>], width: usize) -> Vec<Vec<usize>> {
        let mut out = rows.to_vec();
        out.insert(j, vec![self.monoid.unit(); width]);
        out
    }

    fn vertical_degeneracy(&self, j: usize, rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
        rows.iter()
            .map(|row| {
                let mut out = row.clone();
                out.insert(j, self.monoid.unit());
                out
            })
            .collect()
    }
}

impl SimplicialSet for DiagonalBar {
    fn truncation(&self) -> usize {
        self.truncation
    }

    fn label(&self) -> String {
        let order = if self.horizontal_first { "hv" } else { "vh" };
        format!("diagonal_{order}({})", self.monoid.label())
    }

    fn payload_len(&self, n: usize) -> usize {
        n * n
    }

    fn level(&self, n: usize) -> Result<Vec<Simplex>, Error> {
        if n > self.truncation {
            return Err(Error::Truncation { needed: n, available: self.truncation });
        }
        Ok(element_tuples(self.monoid.size(), n * n)
            .into_iter()
            .map(|t| Simplex::new(n, t))
            .collect())
    }

    fn level_size(&self, n: usize) -> Option<u64> {
        (self.monoid.size() as u64).checked_pow((n * n) as u32)
    }

    fn face(&self, i: usize, x: &Simplex) -> Result<Simplex, Error> {
        let n = x.level();
        if n == 0 || i > n {
            return Err(Error::domain(format!("face {i} undefined at level {n}")));
        }
        let rows = Self::rows(x);
        let out = if self.horizontal_first {
            self.vertical_face(i, &self.horizontal_face(i, &rows))
        } else {
            self.horizontal_face(i, &self.vertical_face(i, &rows))
        };
        Ok(Self::flatten(n - 1, out))
    }

    fn degeneracy(&self, j: usize, x: &Simplex) -> Result<Simplex, Error> {
        let n = x.level();
        if j > n {
            return Err(Error::domain(format!("degeneracy {j} undefined at level {n}")));
        }
        if n + 1 > self.truncation {
            return Err(Error::Truncation { needed: n + 1, available: self.truncation });
        }
        let rows = Self::rows(x);
        let out = if self.horizontal_first {
            self.vertical_degeneracy(j, &self.horizontal_degeneracy(j, &rows, n))
        } else {
            self.horizontal_degeneracy(j, &self.vertical_degeneracy(j, &rows), n + 1)
        };
        Ok(Self::flatten(n + 1, out))
    }
}

/// Builds the diagonal in both operator orders and certifies that the level
/// sets coincide and every elementary operator evaluates identically,
/// through level `truncation`.
pub fn compare_diagonals(
    monoid: &TwistedMonoid,
    truncation: usize,
) -> Result<Certificate, Error> {
    let hv = DiagonalBar::new(monoid.clone(), truncation, true)?;
    let vh = DiagonalBar::new(monoid.clone(), truncation, false)?;
    let label = format!("diagonal-orders({})", monoid.label());
    let mut cases = 0u64;
    for n in 0..=truncation {
        let level = hv.level(n)?;
        cases += 1;
        if level != vh.level(n)? {
            return Ok(Certificate::new(
                label,
                cases,
                Some(format!("level {n}: enumerations differ")),
            ));
        }
        let mut per_simplex = 0u64;
        if n >= 1 {
            per_simplex += (n + 1) as u64;
        }
        if n < truncation {
            per_simplex += (n + 1) as u64;
        }
        cases += per_simplex * level.len() as u64;

        let check = |x: &Simplex| -> Option<String> {
            let run = || -> Result<Option<String>, Error> {
                if n >= 1 {
                    for i in 0..=n {
                        if hv.face(i, x)? != vh.face(i, x)? {
                            return Ok(Some(format!("face {i} orders differ at {x}")));
                        }
                    }
                }
                if n < truncation {
                    for j in 0..=n {
                        if hv.degeneracy(j, x)? != vh.degeneracy(j, x)? {
                            return Ok(Some(format!("degeneracy {j} orders differ at {x}")));
                        }
                    }
                }
                Ok(None)
            };
            run().unwrap_or_else(|e| Some(format!("operator failure at {x}: {e}")))
        };
        if let Some(c) = par::first_failure(&level, check) {
            return Ok(Certificate::new(label, cases, Some(format!("level {n}: {c}"))));
        }
    }
    Ok(Certificate::new(label, cases, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid;
    use crate::simplicial::verify::verify_simplicial_identities;

    #[test]
    fn level_two_grid_count_for_c2() {
        let d = DiagonalBar::new(monoid::cyclic_group(2).unwrap(), 3, true).unwrap();
        assert_eq!(d.level_size(2).unwrap(), 16);
        assert_eq!(d.level(2).unwrap().len(), 16);
        assert_eq!(d.payload_len(3), 9);
    }

    #[test]
    fn non_commutative_input_is_unsupported() {
        let err = DiagonalBar::new(monoid::symmetric_group_3().unwrap(), 2, true)
            .map(|_| ())
            .unwrap_err();
        assert!(matches!(err, Error::Unsupported(_)));
    }

    #[test]
    fn middle_face_agrees_across_orders_on_a_sample() {
        let m = monoid::cyclic_group(4).unwrap();
        let hv = DiagonalBar::new(m.clone(), 2, true).unwrap();
        let vh = DiagonalBar::new(m, 2, false).unwrap();
        // grid rows (g, g^2) and (g^3, g)
        let x = Simplex::new(2, vec![1, 2, 3, 1]);
        let expected = Simplex::new(1, vec![3]);
        assert_eq!(hv.face(1, &x).unwrap(), expected);
        assert_eq!(vh.face(1, &x).unwrap(), expected);
    }

    #[test]
    fn degeneracies_insert_a_unit_cross() {
        let m = monoid::cyclic_group(2).unwrap();
        let hv = DiagonalBar::new(m.clone(), 2, true).unwrap();
        let vh = DiagonalBar::new(m, 2, false).unwrap();
        let x = Simplex::new(1, vec![1]);
        // both orders produce the grid ((e,e),(e,x)) for s_0
        let expected = Simplex::new(2, vec![0, 0, 0, 1]);
        assert_eq!(hv.degeneracy(0, &x).unwrap(), expected);
        assert_eq!(vh.degeneracy(0, &x).unwrap(), expected);
    }

    #[test]
    fn both_orders_are_simplicial_and_agree_for_c2() {
        let m = monoid::cyclic_group(2).unwrap();
        let hv = DiagonalBar::new(m.clone(), 3, true).unwrap();
        assert!(verify_simplicial_identities(&hv, 3).unwrap().passed());
        let vh = DiagonalBar::new(m.clone(), 3, false).unwrap();
        assert!(verify_simplicial_identities(&vh, 3).unwrap().passed());

        let cert = compare_diagonals(&m, 3).unwrap();
        assert!(cert.passed(), "{cert}");
        assert!(cert.cases > 0);
    }
}
