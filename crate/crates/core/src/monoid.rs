//! Finite monoids with an anti-involution `tau(xy) = tau(y) tau(x)`.
//!
//! Elements are ids `0..size`; the unit, multiplication table and involution
//! table are validated at construction, so a `TwistedMonoid` value always
//! satisfies the axioms. Groups built here carry inversion as the involution.

use crate::error::Error;
use crate::homology::snf::{smith_invariants, IntMatrix};
use crate::homology::AbelianGroup;
use crate::operad::Permutation;
use serde::{Deserialize, Serialize};
use thiserror::Error as ThisError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum AxiomViolation {
    LeftUnit { a: String },
    RightUnit { a: String },
    Associativity { a: String, b: String, c: String },
    TauNotInvolutive { a: String },
    TauNotAntiHomomorphism { a: String, b: String },
    TauMovesUnit,
}

impl std::fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AxiomViolation::LeftUnit { a } => write!(f, "e*{a} != {a}"),
            AxiomViolation::RightUnit { a } => write!(f, "{a}*e != {a}"),
            AxiomViolation::Associativity { a, b, c } => {
                write!(f, "({a}*{b})*{c} != {a}*({b}*{c})")
            }
            AxiomViolation::TauNotInvolutive { a } => write!(f, "tau(tau({a})) != {a}"),
            AxiomViolation::TauNotAntiHomomorphism { a, b } => {
                write!(f, "tau({a}*{b}) != tau({b})*tau({a})")
            }
            AxiomViolation::TauMovesUnit => write!(f, "tau(e) != e"),
        }
    }
}

#[derive(Debug, Clone, ThisError)]
pub enum MonoidError {
    #[error("malformed monoid description: {0}")]
    Shape(String),

    #[error("monoid axioms violated: {}", format_violations(.0))]
    Axioms(Vec<AxiomViolation>),

    #[error("monoid file is not valid JSON: {0}")]
    Parse(String),
}

fn format_violations(v: &[AxiomViolation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwistedMonoid {
    label: String,
    names: Vec<String>,
    unit: usize,
    mult: Vec<Vec<usize>>,
    tau: Vec<usize>,
}

impl TwistedMonoid {
    /// Validate tables and build. Shape problems and axiom violations are
    /// reported separately; all axiom violations are collected, not just the
    /// first.
    pub fn new(
        label: impl Into<String>,
        names: Vec<String>,
        unit: usize,
        mult: Vec<Vec<usize>>,
        tau: Vec<usize>,
    ) -> Result<Self, MonoidError> {
        let k = names.len();
        if k == 0 {
            return Err(MonoidError::Shape("no elements".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(MonoidError::Shape(format!("element {i} has an empty name")));
            }
            if names[..i].contains(n) {
                return Err(MonoidError::Shape(format!("duplicate element name {n:?}")));
            }
        }
        if unit >= k {
            return Err(MonoidError::Shape(format!("unit id {unit} out of range")));
        }
        if mult.len() != k || mult.iter().any(|row| row.len() != k) {
            return Err(MonoidError::Shape(format!(
                "multiplication table must be {k}x{k}"
            )));
        }
        if let Some(&v) = mult.iter().flatten().find(|&&v| v >= k) {
            return Err(MonoidError::Shape(format!(
                "multiplication table entry {v} out of range"
            )));
        }
        if tau.len() != k {
            return Err(MonoidError::Shape(format!("tau table must have {k} entries")));
        }
        if let Some(&v) = tau.iter().find(|&&v| v >= k) {
            return Err(MonoidError::Shape(format!("tau table entry {v} out of range")));
        }
        let m = TwistedMonoid { label: label.into(), names, unit, mult, tau };
        let violations = m.violations();
        if violations.is_empty() {
            Ok(m)
        } else {
            Err(MonoidError::Axioms(violations))
        }
    }

    fn violations(&self) -> Vec<AxiomViolation> {
        let k = self.size();
        let mut out = Vec::new();
        for a in 0..k {
            if self.mul(self.unit, a) != a {
                out.push(AxiomViolation::LeftUnit { a: self.names[a].clone() });
            }
            if self.mul(a, self.unit) != a {
                out.push(AxiomViolation::RightUnit { a: self.names[a].clone() });
            }
            if self.tau(self.tau(a)) != a {
                out.push(AxiomViolation::TauNotInvolutive { a: self.names[a].clone() });
            }
        }
        for a in 0..k {
            for b in 0..k {
                if self.tau(self.mul(a, b)) != self.mul(self.tau(b), self.tau(a)) {
                    out.push(AxiomViolation::TauNotAntiHomomorphism {
                        a: self.names[a].clone(),
                        b: self.names[b].clone(),
                    });
                }
                for c in 0..k {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        out.push(AxiomViolation::Associativity {
                            a: self.names[a].clone(),
                            b: self.names[b].clone(),
                            c: self.names[c].clone(),
                        });
                    }
                }
            }
        }
        if self.tau(self.unit) != self.unit {
            out.push(AxiomViolation::TauMovesUnit);
        }
        out
    }

    /// Same tables with a different involution, re-validated.
    pub fn with_tau(&self, tau: Vec<usize>) -> Result<TwistedMonoid, MonoidError> {
        TwistedMonoid::new(
            self.label.clone(),
            self.names.clone(),
            self.unit,
            self.mult.clone(),
            tau,
        )
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn tau(&self, a: usize) -> usize {
        self.tau[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn id_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_commutative(&self) -> bool {
        let k = self.size();
        (0..k).all(|a| (a..k).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_group(&self) -> bool {
        let k = self.size();
        (0..k).all(|a| {
            (0..k).any(|b| self.mul(a, b) == self.unit && self.mul(b, a) == self.unit)
        })
    }

    /// Elements fixed by the involution, ascending.
    pub fn fixed_points(&self) -> FixedSet {
        FixedSet {
            members: (0..self.size()).filter(|&a| self.tau(a) == a).collect(),
        }
    }

    /// `a * b * tau(a)`; `b` must be a fixed point, and then the result is one.
    pub fn twisted_action(&self, a: usize, b: usize) -> Result<usize, Error> {
        if a >= self.size() || b >= self.size() {
            return Err(Error::domain("element id out of range".to_string()));
        }
        if self.tau(b) != b {
            return Err(Error::domain(format!(
                "{} is not fixed by the involution",
                self.name(b)
            )));
        }
        Ok(self.mul(self.mul(a, b), self.tau(a)))
    }

    /// Group completion of a commutative monoid: generators `x_a`, relations
    /// `x_a + x_b = x_{ab}`, presented via Smith normal form of the relation
    /// matrix.
    pub fn grothendieck_group(&self) -> Result<AbelianGroup, Error> {
        if !self.is_commutative() {
            return Err(Error::unsupported(format!(
                "{} is not commutative; group completion here is defined for commutative monoids",
                self.label
            )));
        }
        let k = self.size();
        let mut rel = IntMatrix::zero(k * k, k);
        for a in 0..k {
            for b in 0..k {
                let row = a * k + b;
                rel.add_to_entry(row, a, 1);
                rel.add_to_entry(row, b, 1);
                rel.add_to_entry(row, self.mul(a, b), -1);
            }
        }
        let invariants = smith_invariants(&rel);
        Ok(AbelianGroup::from_presentation(k, &invariants))
    }

    /// Serialize in the monoid file format.
    pub fn to_json_string(&self) -> String {
        let raw = RawMonoid {
            elements: self.names.clone(),
            unit: self.names[self.unit].clone(),
            mult: self
                .mult
                .iter()
                .map(|row| row.iter().map(|&v| self.names[v].clone()).collect())
                .collect(),
            tau: self.tau.iter().map(|&v| self.names[v].clone()).collect(),
        };
        serde_json::to_string_pretty(&raw).expect("serialization cannot fail")
    }
}

/// The involution-fixed elements of a monoid, ascending ids.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FixedSet {
    members: Vec<usize>,
}

impl FixedSet {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }
}

#[derive(Serialize, Deserialize)]
struct RawMonoid {
    elements: Vec<String>,
    unit: String,
    mult: Vec<Vec<String>>,
    tau: Vec<String>,
}

/// Parse the monoid file format: element names, unit, multiplication table in
/// row-major order with rows indexed by the left factor, and the involution.
pub fn from_json_str(label: &str, text: &str) -> Result<TwistedMonoid, MonoidError> {
    let raw: RawMonoid =
        serde_json::from_str(text).map_err(|e| MonoidError::Parse(e.to_string()))?;
    let resolve = |name: &str| -> Result<usize, MonoidError> {
        raw.elements
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| MonoidError::Shape(format!("unknown element name {name:?}")))
    };
    let unit = resolve(&raw.unit)?;
    if raw.mult.len() != raw.elements.len() {
        return Err(MonoidError::Shape(format!(
            "multiplication table has {} rows for {} elements",
            raw.mult.len(),
            raw.elements.len()
        )));
    }
    let mut mult = Vec::with_capacity(raw.mult.len());
    for row in &raw.mult {
        if row.len() != raw.elements.len() {
            return Err(MonoidError::Shape(format!(
                "multiplication table row has {} entries for {} elements",
                row.len(),
                raw.elements.len()
            )));
        }
        mult.push(row.iter().map(|n| resolve(n)).collect::<Result<Vec<_>, _>>()?);
    }
    if raw.tau.len() != raw.elements.len() {
        return Err(MonoidError::Shape(format!(
            "tau table has {} entries for {} elements",
            raw.tau.len(),
            raw.elements.len()
        )));
    }
    let tau = raw.tau.iter().map(|n| resolve(n)).collect::<Result<Vec<_>, _>>()?;
    TwistedMonoid::new(label, raw.elements, unit, mult, tau)
}

/// Cyclic group of order `k` with inversion as the involution.
pub fn cyclic_group(k: usize) -> Result<TwistedMonoid, MonoidError> {
    if k == 0 {
        return Err(MonoidError::Shape("cyclic group needs order >= 1".into()));
    }
    let names = (0..k)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    let mult = (0..k).map(|a| (0..k).map(|b| (a + b) % k).collect()).collect();
    let tau = (0..k).map(|a| (k - a) % k).collect();
    TwistedMonoid::new(format!("c{k}"), names, 0, mult, tau)
}

/// The symmetric group on three letters with inversion as the involution.
pub fn symmetric_group_3() -> Result<TwistedMonoid, MonoidError> {
    let perms: Vec<(&str, Permutation)> = vec![
        ("e", Permutation::new(vec![1, 2, 3]).unwrap()),
        ("(12)", Permutation::new(vec![2, 1, 3]).unwrap()),
        ("(13)", Permutation::new(vec![3, 2, 1]).unwrap()),
        ("(23)", Permutation::new(vec![1, 3, 2]).unwrap()),
        ("(123)", Permutation::new(vec![2, 3, 1]).unwrap()),
        ("(132)", Permutation::new(vec![3, 1, 2]).unwrap()),
    ];
    let index_of = |p: &Permutation| perms.iter().position(|(_, q)| q == p).unwrap();
    let names = perms.iter().map(|(n, _)| n.to_string()).collect();
    let mult = perms
        .iter()
        .map(|(_, a)| {
            perms
                .iter()
                .map(|(_, b)| index_of(&a.compose(b).unwrap()))
                .collect()
        })
        .collect();
    let tau = perms.iter().map(|(_, a)| index_of(&a.inverse())).collect();
    TwistedMonoid::new("s3", names, 0, mult, tau)
}

/// Two elements `e, x` with `x*x = x` and the identity involution.
pub fn boolean_monoid() -> Result<TwistedMonoid, MonoidError> {
    TwistedMonoid::new(
        "boolean",
        vec!["e".into(), "x".into()],
        0,
        vec![vec![0, 1], vec![1, 1]],
        vec![0, 1],
    )
}

/// `{0, ..., k-1}` under minimum, with unit `k-1` and the identity involution.
pub fn min_monoid(k: usize) -> Result<TwistedMonoid, MonoidError> {
    if k == 0 {
        return Err(MonoidError::Shape("min monoid needs at least one element".into()));
    }
    let names = (0..k).map(|i| i.to_string()).collect();
    let mult = (0..k).map(|a| (0..k).map(|b| a.min(b)).collect()).collect();
    let tau = (0..k).collect();
    TwistedMonoid::new(format!("min{k}"), names, k - 1, mult, tau)
}

/// Componentwise product with componentwise involution.
pub fn direct_product(a: &TwistedMonoid, b: &TwistedMonoid) -> Result<TwistedMonoid, MonoidError> {
    let ka = a.size();
    let kb = b.size();
    let id = |x: usize, y: usize| x * kb + y;
    let mut names = Vec::with_capacity(ka * kb);
    for x in 0..ka {
        for y in 0..kb {
            names.push(format!("({},{})", a.name(x), b.name(y)));
        }
    }
    let mut mult = vec![vec![0; ka * kb]; ka * kb];
    for x1 in 0..ka {
        for y1 in 0..kb {
            for x2 in 0..ka {
                for y2 in 0..kb {
                    mult[id(x1, y1)][id(x2, y2)] = id(a.mul(x1, x2), b.mul(y1, y2));
                }
            }
        }
    }
    let mut tau = vec![0; ka * kb];
    for x in 0..ka {
        for y in 0..kb {
            tau[id(x, y)] = id(a.tau(x), b.tau(y));
        }
    }
    TwistedMonoid::new(
        format!("{}x{}", a.label(), b.label()),
        names,
        id(a.unit(), b.unit()),
        mult,
        tau,
    )
}

/// All tuples over `0..k` of the given length, lexicographic.
pub fn element_tuples(k: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..k).map(move |e| {
                    let mut next = prefix.clone();
                    next.push(e);
                    next
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builders_validate() {
        for m in [
            cyclic_group(1).unwrap(),
            cyclic_group(2).unwrap(),
            cyclic_group(3).unwrap(),
            cyclic_group(4).unwrap(),
            symmetric_group_3().unwrap(),
            boolean_monoid().unwrap(),
            min_monoid(3).unwrap(),
        ] {
            assert!(m.size() >= 1, "{} has no elements", m.label());
        }
    }

    #[test]
    fn cyclic_group_tables() {
        let c4 = cyclic_group(4).unwrap();
        assert_eq!(c4.tau(0), 0);
        assert_eq!(c4.tau(1), 3);
        assert_eq!(c4.tau(2), 2);
        assert_eq!(c4.tau(3), 1);
        assert_eq!(c4.mul(3, 2), 1);

        // inversion on a group of exponent two is the identity
        let c2 = cyclic_group(2).unwrap();
        assert_eq!(c2.tau(0), 0);
        assert_eq!(c2.tau(1), 1);
    }

    #[test]
    fn s3_is_the_right_group() {
        let s3 = symmetric_group_3().unwrap();
        assert_eq!(s3.size(), 6);
        assert!(s3.is_group());
        assert!(!s3.is_commutative());
        let a = s3.id_of("(12)").unwrap();
        let b = s3.id_of("(13)").unwrap();
        assert_eq!(s3.name(s3.mul(a, b)), "(132)");
        assert_eq!(s3.name(s3.mul(b, a)), "(123)");
    }

    #[test]
    fn identity_tau_on_s3_is_rejected_with_anti_hom_violations() {
        let s3 = symmetric_group_3().unwrap();
        let err = s3.with_tau((0..6).collect()).unwrap_err();
        match err {
            MonoidError::Axioms(violations) => {
                assert!(violations
                    .iter()
                    .any(|v| matches!(v, AxiomViolation::TauNotAntiHomomorphism { .. })));
            }
            other => panic!("expected axiom violations, got {other}"),
        }
    }

    #[test]
    fn broken_tables_are_rejected() {
        // non-associative: x*x = e but x is not invertible-consistent
        let err = TwistedMonoid::new(
            "bad",
            vec!["e".into(), "x".into(), "y".into()],
            0,
            vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 0]],
            vec![0, 1, 2],
        )
        .unwrap_err();
        assert!(matches!(err, MonoidError::Axioms(_)));

        let err = TwistedMonoid::new("bad", vec!["e".into()], 0, vec![vec![0, 0]], vec![0])
            .unwrap_err();
        assert!(matches!(err, MonoidError::Shape(_)));

        let err =
            TwistedMonoid::new("bad", vec!["e".into()], 1, vec![vec![0]], vec![0]).unwrap_err();
        assert!(matches!(err, MonoidError::Shape(_)));
    }

    #[test]
    fn fixed_points_examples() {
        assert_eq!(cyclic_group(2).unwrap().fixed_points().members(), &[0, 1]);
        assert_eq!(cyclic_group(4).unwrap().fixed_points().members(), &[0, 2]);
        let s3 = symmetric_group_3().unwrap();
        assert_eq!(s3.fixed_points().members(), &[0, 1, 2, 3]);
        assert_eq!(boolean_monoid().unwrap().fixed_points().len(), 2);
    }

    #[test]
    fn twisted_action_examples() {
        let s3 = symmetric_group_3().unwrap();
        let a = s3.id_of("(12)").unwrap();
        let b = s3.id_of("(13)").unwrap();
        assert_eq!(s3.name(s3.twisted_action(a, b).unwrap()), "(23)");

        let c4 = cyclic_group(4).unwrap();
        assert_eq!(c4.twisted_action(1, 2).unwrap(), 2);

        // unit acts trivially
        for m in [s3.clone(), c4] {
            for &b in m.fixed_points().members() {
                assert_eq!(m.twisted_action(m.unit(), b).unwrap(), b);
            }
        }

        // rejects non-fixed arguments
        let rot = s3.id_of("(123)").unwrap();
        assert!(s3.twisted_action(a, rot).is_err());
    }

    #[test]
    fn twisted_action_is_a_monoid_action_into_the_fixed_set() {
        for m in [
            cyclic_group(4).unwrap(),
            symmetric_group_3().unwrap(),
            boolean_monoid().unwrap(),
            min_monoid(3).unwrap(),
        ] {
            let fix = m.fixed_points();
            for &b in fix.members() {
                for a1 in 0..m.size() {
                    let once = m.twisted_action(a1, b).unwrap();
                    assert!(fix.contains(once), "action escaped the fixed set");
                    for a2 in 0..m.size() {
                        let nested = m.twisted_action(a2, once).unwrap();
                        let combined = m.twisted_action(m.mul(a2, a1), b).unwrap();
                        assert_eq!(nested, combined);
                    }
                }
            }
        }
    }

    #[test]
    fn grothendieck_groups() {
        let trivial = AbelianGroup::free(0);
        assert_eq!(boolean_monoid().unwrap().grothendieck_group().unwrap(), trivial);
        assert_eq!(min_monoid(2).unwrap().grothendieck_group().unwrap(), trivial);
        assert_eq!(min_monoid(3).unwrap().grothendieck_group().unwrap(), trivial);

        assert_eq!(
            cyclic_group(3).unwrap().grothendieck_group().unwrap(),
            AbelianGroup::with_torsion(0, &[3])
        );
        assert_eq!(
            cyclic_group(4).unwrap().grothendieck_group().unwrap(),
            AbelianGroup::with_torsion(0, &[4])
        );
        let c2 = cyclic_group(2).unwrap();
        let klein = direct_product(&c2, &c2).unwrap();
        assert_eq!(
            klein.grothendieck_group().unwrap(),
            AbelianGroup::with_torsion(0, &[2, 2])
        );

        assert!(symmetric_group_3().unwrap().grothendieck_group().is_err());
    }

    #[test]
    fn direct_product_shape() {
        let c2 = cyclic_group(2).unwrap();
        let klein = direct_product(&c2, &c2).unwrap();
        assert_eq!(klein.size(), 4);
        assert!(klein.is_group());
        assert!(klein.is_commutative());
        // every element is its own inverse
        assert_eq!(klein.fixed_points().len(), 4);
    }

    #[test]
    fn json_round_trip_and_errors() {
        let s3 = symmetric_group_3().unwrap();
        let text = s3.to_json_string();
        let back = from_json_str("s3", &text).unwrap();
        assert_eq!(back, s3);

        assert!(matches!(
            from_json_str("x", "{not json"),
            Err(MonoidError::Parse(_))
        ));
        assert!(matches!(
            from_json_str(
                "x",
                r#"{"elements":["e"],"unit":"q","mult":[["e"]],"tau":["e"]}"#
            ),
            Err(MonoidError::Shape(_))
        ));
        assert!(matches!(
            from_json_str(
                "x",
                r#"{"elements":["e","x"],"unit":"e","mult":[["e","x"]],"tau":["e","x"]}"#
            ),
            Err(MonoidError::Shape(_))
        ));
        // valid shape, broken axioms: x*x = x but tau swaps e and x
        assert!(matches!(
            from_json_str(
                "x",
                r#"{"elements":["e","x"],"unit":"e","mult":[["e","x"],["x","x"]],"tau":["x","e"]}"#
            ),
            Err(MonoidError::Axioms(_))
        ));
    }

    #[test]
    fn element_tuples_enumeration() {
        assert_eq!(element_tuples(2, 0), vec![Vec::<usize>::new()]);
        assert_eq!(element_tuples(2, 2).len(), 4);
        assert_eq!(element_tuples(3, 3).len(), 27);
        assert_eq!(element_tuples(2, 2)[1], vec![0, 1]);
    }
}
