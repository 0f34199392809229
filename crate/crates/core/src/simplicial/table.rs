//! Complexes given by explicit operator tables, for driving the engine with
//! small hand-built spaces.

use crate::error::Error;
use crate::simplicial::{InvolutiveSimplicialSet, Simplex, SimplicialSet};

/// A complex whose level-`n` simplices are the cell indices
/// `0 .. counts[n]`, with faces, degeneracies, and an optional involution
/// looked up in tables. The constructor validates table shapes and index
/// ranges; structural axioms are the verification sweeps' business.
pub struct TableComplex {
    label: String,
    counts: Vec<usize>,
    faces: Vec<Vec<Vec<usize>>>,
    degeneracies: Vec<Vec<Vec<usize>>>,
    involution: Option<Vec<Vec<usize>>>,
}

impl TableComplex {
    /// `faces[n][i][c]` is `d_i` of cell `c` at level `n >= 1`;
    /// `degeneracies[n][j][c]` is `s_j` of cell `c` at level `n < N`.
    /// `faces[0]` and `degeneracies[N]` must be empty.
    pub fn new(
        label: impl Into<String>,
        counts: Vec<usize>,
        faces: Vec<Vec<Vec<usize>>>,
        degeneracies: Vec<Vec<Vec<usize>>>,
        involution: Option<Vec<Vec<usize>>>,
    ) -> Result<Self, Error> {
        if counts.is_empty() {
            return Err(Error::domain("a table complex needs level 0".to_string()));
        }
        let top = counts.len() - 1;
        if faces.len() != counts.len() || degeneracies.len() != counts.len() {
            return Err(Error::domain(
                "operator tables must cover exactly the listed levels".to_string(),
            ));
        }
        if !faces[0].is_empty() {
            return Err(Error::domain("level 0 admits no faces".to_string()));
        }
        if !degeneracies[top].is_empty() {
            return Err(Error::domain(
                "degeneracies out of the top level overrun the truncation".to_string(),
            ));
        }
        for n in 1..=top {
            let table = &faces[n];
            if table.len() != n + 1 {
                return Err(Error::domain(format!("level {n} needs faces d_0 ..= d_{n}")));
            }
            for (i, row) in table.iter().enumerate() {
                if row.len() != counts[n] {
                    return Err(Error::domain(format!("d_{i} at level {n} has wrong width")));
                }
                if row.iter().any(|&c| c >= counts[n - 1]) {
                    return Err(Error::domain(format!(
                        "d_{i} at level {n} leaves the cell range"
                    )));
                }
            }
        }
        for n in 0..top {
            let table = &degeneracies[n];
            if table.len() != n + 1 {
                return Err(Error::domain(format!(
                    "level {n} needs degeneracies s_0 ..= s_{n}"
                )));
            }
            for (j, row) in table.iter().enumerate() {
                if row.len() != counts[n] {
                    return Err(Error::domain(format!("s_{j} at level {n} has wrong width")));
                }
                if row.iter().any(|&c| c >= counts[n + 1]) {
                    return Err(Error::domain(format!(
                        "s_{j} at level {n} leaves the cell range"
                    )));
                }
            }
        }
        if let Some(inv) = &involution {
            if inv.len() != counts.len() {
                return Err(Error::domain(
                    "involution table must cover exactly the listed levels".to_string(),
                ));
            }
            for (n, row) in inv.iter().enumerate() {
                if row.len() != counts[n] || row.iter().any(|&c| c >= counts[n]) {
                    return Err(Error::domain(format!(
                        "involution at level {n} leaves the cell range"
                    )));
                }
            }
        }
        Ok(TableComplex { label: label.into(), counts, faces, degeneracies, involution })
    }

    fn cell(&self, x: &Simplex) -> Result<usize, Error> {
        let n = x.level();
        if n >= self.counts.len() || x.data().len() != 1 || x.data()[0] >= self.counts[n] {
            return Err(Error::domain(format!("{x} is not a cell of {}", self.label)));
        }
        Ok(x.data()[0])
    }
}

impl SimplicialSet for TableComplex {
    fn truncation(&self) -> usize {
        self.counts.len() - 1
    }

    fn label(&self) -> String {
        self.label.clone()
    }

    fn payload_len(&self, _n: usize) -> usize {
        1
    }

    fn level(&self, n: usize) -> Result<Vec<Simplex>, Error> {
        if n > self.truncation() {
            return Err(Error::Truncation { needed: n, available: self.truncation() });
        }
        Ok((0..self.counts[n]).map(|c| Simplex::new(n, vec![c])).collect())
    }

    fn face(&self, i: usize, x: &Simplex) -> Result<Simplex, Error> {
        let n = x.level();
        let c = self.cell(x)?;
        if n == 0 || i > n {
            return Err(Error::domain(format!("face {i} is undefined at level {n}")));
        }
        Ok(Simplex::new(n - 1, vec![self.faces[n][i][c]]))
    }

    fn degeneracy(&self, j: usize, x: &Simplex) -> Result<Simplex, Error> {
        let n = x.level();
        let c = self.cell(x)?;
        if n + 1 > self.truncation() {
            return Err(Error::Truncation { needed: n + 1, available: self.truncation() });
        }
        if j > n {
            return Err(Error::domain(format!("degeneracy {j} is undefined at level {n}")));
        }
        Ok(Simplex::new(n + 1, vec![self.degeneracies[n][j][c]]))
    }
}

impl InvolutiveSimplicialSet for TableComplex {
    fn involution(&self, x: &Simplex) -> Result<Simplex, Error> {
        let c = self.cell(x)?;
        match &self.involution {
            Some(inv) => Ok(Simplex::new(x.level(), vec![inv[x.level()][c]])),
            None => Err(Error::unsupported(format!(
                "{} carries no involution",
                self.label
            ))),
        }
    }
}

/// The interval with its endpoints glued: one vertex, one nondegenerate
/// edge. Level `n` holds the basepoint as cell 0 and, for `1 <= j <= n`,
/// the cell `f_j` jumping from the initial to the final vertex at position
/// `j`. The involution reverses the interval, sending `f_j` to `f_{n+1-j}`.
pub fn circle(truncation: usize) -> Result<TableComplex, Error> {
    if truncation < 1 {
        return Err(Error::domain(
            "the circle needs at least levels 0 and 1".to_string(),
        ));
    }
    let top = truncation;
    let counts: Vec<usize> = (0..=top).map(|n| n + 1).collect();

    let mut faces: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for n in 1..=top {
        let mut per_i = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut row = Vec::with_capacity(n + 1);
            row.push(0);
            for j in 1..=n {
                let image = if i < j {
                    if j == 1 {
                        0
                    } else {
                        j - 1
                    }
                } else if j == n {
                    0
                } else {
                    j
                };
                row.push(image);
            }
            per_i.push(row);
        }
        faces.push(per_i);
    }

    let mut degeneracies: Vec<Vec<Vec<usize>>> = Vec::with_capacity(top + 1);
    for n in 0..top {
        let mut per_j = Vec::with_capacity(n + 1);
        for j_rep in 0..=n {
            let mut row = Vec::with_capacity(n + 1);
            row.push(0);
            for j in 1..=n {
                row.push(if j <= j_rep { j } else { j + 1 });
            }
            per_j.push(row);
        }
        degeneracies.push(per_j);
    }
    degeneracies.push(Vec::new());

    let involution: Vec<Vec<usize>> = (0..=top)
        .map(|n| {
            let mut row = vec![0];
            row.extend((1..=n).map(|j| n + 1 - j));
            row
        })
        .collect();

    TableComplex::new("circle", counts, faces, degeneracies, Some(involution))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::verify::{verify_simplicial_identities, verify_twisted_axioms};

    #[test]
    fn circle_levels_grow_by_one_cell() {
        let c = circle(4).unwrap();
        let sizes: Vec<u64> = (0..=4).map(|n| c.level_size(n).unwrap()).collect();
        assert_eq!(sizes, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn circle_edge_is_a_loop() {
        let c = circle(2).unwrap();
        let edge = Simplex::new(1, vec![1]);
        assert_eq!(c.face(0, &edge).unwrap(), Simplex::new(0, vec![0]));
        assert_eq!(c.face(1, &edge).unwrap(), Simplex::new(0, vec![0]));
        assert_eq!(c.degeneracy(0, &edge).unwrap(), Simplex::new(2, vec![2]));
    }

    #[test]
    fn circle_passes_the_structural_sweeps() {
        let c = circle(4).unwrap();
        assert!(verify_simplicial_identities(&c, 4).unwrap().passed());
        let cert = verify_twisted_axioms(&c, 4).unwrap();
        assert!(cert.passed(), "{cert}");
    }

    #[test]
    fn circle_has_one_nondegenerate_cell_in_low_degrees_only() {
        let c = circle(4).unwrap();
        let mut nondegenerate = Vec::new();
        for n in 0..=4usize {
            let count = c
                .level(n)
                .unwrap()
                .iter()
                .filter(|x| !c.is_degenerate(x).unwrap())
                .count();
            nondegenerate.push(count);
        }
        assert_eq!(nondegenerate, vec![1, 1, 0, 0, 0]);
    }

    #[test]
    fn tables_with_range_errors_are_rejected() {
        // a one-edge graph whose face table points at a nonexistent vertex
        let bad = TableComplex::new(
            "bad",
            vec![1, 1],
            vec![Vec::new(), vec![vec![0], vec![1]]],
            vec![vec![vec![0]], Vec::new()],
            None,
        );
        assert!(bad.is_err());

        let wrong_width = TableComplex::new(
            "bad",
            vec![1, 2],
            vec![Vec::new(), vec![vec![0], vec![0]]],
            vec![vec![vec![0]], Vec::new()],
            None,
        );
        assert!(wrong_width.is_err());
    }

    #[test]
    fn missing_involution_is_reported_as_unsupported() {
        let plain = TableComplex::new(
            "segment",
            vec![1, 1],
            vec![Vec::new(), vec![vec![0], vec![0]]],
            vec![vec![vec![0]], Vec::new()],
            None,
        )
        .unwrap();
        let err = plain.involution(&Simplex::new(0, vec![0])).unwrap_err();
        assert!(matches!(err, Error::Unsupported(_)));
    }
}
