//! The distributive lattice `J(P)` of poset ideals and the monomials of the
//! Hibi ring generated by them.
//!
//! Exponents follow the down-set convention: a monomial `T^r prod X_p^{s(p)}`
//! lies in the ring exactly when `0 <= s(p) <= r` and `s` is order-reversing,
//! so smaller elements carry larger exponents.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poset::Poset;

/// A down-closed subset of a poset, stored as ascending element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PosetIdeal {
    members: Vec<usize>,
}

impl PosetIdeal {
    pub fn empty() -> PosetIdeal {
        PosetIdeal {
            members: Vec::new(),
        }
    }

    /// Validates down-closure.
    pub fn new(poset: &Poset, members: impl IntoIterator<Item = usize>) -> Result<PosetIdeal> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        let ideal = PosetIdeal { members };
        if let Some(&bad) = ideal.members.iter().find(|&&x| x >= poset.len()) {
            return Err(Error::UnknownElement(format!("#{bad}")));
        }
        let closed = ideal
            .members
            .iter()
            .all(|&x| poset.lower_covers(x).iter().all(|y| ideal.contains(*y)));
        if closed {
            Ok(ideal)
        } else {
            Err(Error::NotDownClosed(ideal.display(poset)))
        }
    }

    pub fn from_names<S: AsRef<str>>(poset: &Poset, names: &[S]) -> Result<PosetIdeal> {
        PosetIdeal::new(poset, poset.indices(names)?)
    }

    /// `{ q | q <= x }`.
    pub fn principal(poset: &Poset, x: usize) -> PosetIdeal {
        PosetIdeal {
            members: poset.down_set(x),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn union(&self, other: &PosetIdeal) -> PosetIdeal {
        let mut members = self.members.clone();
        members.extend_from_slice(&other.members);
        members.sort_unstable();
        members.dedup();
        PosetIdeal { members }
    }

    pub fn intersection(&self, other: &PosetIdeal) -> PosetIdeal {
        PosetIdeal {
            members: self
                .members
                .iter()
                .copied()
                .filter(|&x| other.contains(x))
                .collect(),
        }
    }

    pub fn indicator(&self, len: usize) -> Vec<bool> {
        let mut v = vec![false; len];
        for &x in &self.members {
            v[x] = true;
        }
        v
    }

    pub fn names<'p>(&self, poset: &'p Poset) -> Vec<&'p str> {
        self.members.iter().map(|&x| poset.name(x)).collect()
    }

    /// `{a, b, c}` using element names.
    pub fn display(&self, poset: &Poset) -> String {
        format!("{{{}}}", self.names(poset).join(", "))
    }
}

/// Enumerates `J(P)` ordered by size, then lexicographically by member indices.
pub fn enumerate_ideals(poset: &Poset, limits: &Limits) -> Result<Vec<PosetIdeal>> {
    if poset.len() > limits.max_elements {
        return Err(Error::SizeCapExceeded {
            elements: poset.len(),
            cap: limits.max_elements,
        });
    }
    let order = poset.linear_extension();
    let mut included = vec![false; poset.len()];
    let mut out = Vec::new();
    collect_ideals(poset, &order, 0, &mut included, &mut out);
    out.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.members.cmp(&b.members))
    });
    Ok(out)
}

fn collect_ideals(
    poset: &Poset,
    order: &[usize],
    depth: usize,
    included: &mut [bool],
    out: &mut Vec<PosetIdeal>,
) {
    let Some(&x) = order.get(depth) else {
        let members = (0..included.len()).filter(|&i| included[i]).collect();
        out.push(PosetIdeal { members });
        return;
    };
    collect_ideals(poset, order, depth + 1, included, out);
    if poset.lower_covers(x).iter().all(|&y| included[y]) {
        included[x] = true;
        collect_ideals(poset, order, depth + 1, included, out);
        included[x] = false;
    }
}

/// A monomial `T^t_degree * prod X_p^exponents[p]` of the Hibi ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HibiMonomial {
    t_degree: u64,
    exponents: Vec<u64>,
}

impl HibiMonomial {
    /// Checks the semigroup constraints before building.
    pub fn new(poset: &Poset, t_degree: u64, exponents: Vec<u64>) -> Option<HibiMonomial> {
        let signed: Vec<i64> = exponents.iter().map(|&e| e as i64).collect();
        in_semigroup(poset, t_degree as i64, &signed).then_some(HibiMonomial {
            t_degree,
            exponents,
        })
    }

    /// The unit monomial `1` for a poset with `len` elements.
    pub fn one(len: usize) -> HibiMonomial {
        HibiMonomial {
            t_degree: 0,
            exponents: vec![0; len],
        }
    }

    pub(crate) fn from_parts_unchecked(t_degree: u64, exponents: Vec<u64>) -> HibiMonomial {
        HibiMonomial {
            t_degree,
            exponents,
        }
    }

    pub fn t_degree(&self) -> u64 {
        self.t_degree
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn exponent(&self, x: usize) -> u64 {
        self.exponents[x]
    }

    pub fn pow(&self, k: u64) -> HibiMonomial {
        HibiMonomial {
            t_degree: self.t_degree * k,
            exponents: self.exponents.iter().map(|e| e * k).collect(),
        }
    }

    /// Exact quotient `self / other` if it is still a monomial of the ring.
    pub fn divide(&self, poset: &Poset, other: &HibiMonomial) -> Option<HibiMonomial> {
        let r = self.t_degree as i64 - other.t_degree as i64;
        let s: Vec<i64> = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| a as i64 - b as i64)
            .collect();
        in_semigroup(poset, r, &s).then(|| HibiMonomial {
            t_degree: r as u64,
            exponents: s.into_iter().map(|e| e as u64).collect(),
        })
    }

    pub fn display<'a>(&'a self, poset: &'a Poset) -> MonomialDisplay<'a> {
        MonomialDisplay {
            monomial: self,
            poset,
        }
    }
}

// monomials multiply by adding exponent vectors
#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for &HibiMonomial {
    type Output = HibiMonomial;

    fn mul(self, rhs: &HibiMonomial) -> HibiMonomial {
        HibiMonomial {
            t_degree: self.t_degree + rhs.t_degree,
            exponents: self
                .exponents
                .iter()
                .zip(&rhs.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

pub struct MonomialDisplay<'a> {
    monomial: &'a HibiMonomial,
    poset: &'a Poset,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.monomial;
        let power = |f: &mut fmt::Formatter<'_>, base: &str, e: u64| match e {
            0 => Ok(()),
            1 => write!(f, "{base}"),
            _ => write!(f, "{base}^{e}"),
        };
        if m.t_degree == 0 && m.exponents.iter().all(|&e| e == 0) {
            return write!(f, "1");
        }
        power(f, "T", m.t_degree)?;
        for (x, &e) in m.exponents.iter().enumerate() {
            if e > 0 {
                f.write_str(" ")?;
                power(f, &format!("X{}", self.poset.name(x)), e)?;
            }
        }
        Ok(())
    }
}

/// The generator `phi(I) = T * prod_{p in I} X_p`.
pub fn phi(poset: &Poset, ideal: &PosetIdeal) -> HibiMonomial {
    let exponents = ideal
        .indicator(poset.len())
        .into_iter()
        .map(u64::from)
        .collect();
    HibiMonomial {
        t_degree: 1,
        exponents,
    }
}

/// `phi(I)` for every ideal, in canonical ideal order.
pub fn generators(poset: &Poset, limits: &Limits) -> Result<Vec<HibiMonomial>> {
    Ok(enumerate_ideals(poset, limits)?
        .iter()
        .map(|i| phi(poset, i))
        .collect())
}

/// Lattice-point membership in the cone over the order polytope:
/// `0 <= s(p) <= r` and `p <= p'` implies `s(p) >= s(p')`.
pub fn in_semigroup(poset: &Poset, t_degree: i64, exponents: &[i64]) -> bool {
    if exponents.len() != poset.len() || t_degree < 0 {
        return false;
    }
    if exponents.iter().any(|&e| e < 0 || e > t_degree) {
        return false;
    }
    poset
        .cover_pairs()
        .into_iter()
        .all(|(x, y)| exponents[x] >= exponents[y])
}

/// Krull dimension of the Hibi ring, `#P + 1`.
pub fn dimension(poset: &Poset) -> usize {
    poset.len() + 1
}

/// Generators of the dual cone: `(1; indicator of I)` for every ideal `I`.
pub fn cone_generators(poset: &Poset, limits: &Limits) -> Result<Vec<Vec<u8>>> {
    Ok(enumerate_ideals(poset, limits)?
        .iter()
        .map(|ideal| {
            std::iter::once(1)
                .chain(ideal.indicator(poset.len()).into_iter().map(u8::from))
                .collect()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zigzag() -> Poset {
        Poset::build(["1", "2", "3", "4"], [("1", "3"), ("2", "3"), ("2", "4")]).unwrap()
    }

    fn point() -> Poset {
        Poset::build(["x"], Vec::<(&str, &str)>::new()).unwrap()
    }

    #[test]
    fn zigzag_lattice() {
        let p = zigzag();
        let ideals = enumerate_ideals(&p, &Limits::default()).unwrap();
        let shown: Vec<String> = ideals.iter().map(|i| i.display(&p)).collect();
        assert_eq!(
            shown,
            vec![
                "{}",
                "{1}",
                "{2}",
                "{1, 2}",
                "{2, 4}",
                "{1, 2, 3}",
                "{1, 2, 4}",
                "{1, 2, 3, 4}"
            ]
        );
    }

    #[test]
    fn small_lattices() {
        let l = Limits::default();
        assert_eq!(
            enumerate_ideals(&Poset::empty(), &l).unwrap(),
            vec![PosetIdeal::empty()]
        );
        let anti = Poset::build(["a", "b", "c"], Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!(enumerate_ideals(&anti, &l).unwrap().len(), 8);
    }

    #[test]
    fn size_cap() {
        let p = zigzag();
        assert_eq!(
            enumerate_ideals(&p, &Limits::default().with_max_elements(3)),
            Err(Error::SizeCapExceeded {
                elements: 4,
                cap: 3
            })
        );
    }

    #[test]
    fn generators_render() {
        let p = zigzag();
        let gens: Vec<String> = generators(&p, &Limits::default())
            .unwrap()
            .iter()
            .map(|m| m.display(&p).to_string())
            .collect();
        assert_eq!(
            gens,
            vec![
                "T",
                "T X1",
                "T X2",
                "T X1 X2",
                "T X2 X4",
                "T X1 X2 X3",
                "T X1 X2 X4",
                "T X1 X2 X3 X4"
            ]
        );

        let pt = point();
        let gens: Vec<String> = generators(&pt, &Limits::default())
            .unwrap()
            .iter()
            .map(|m| m.display(&pt).to_string())
            .collect();
        assert_eq!(gens, vec!["T", "T Xx"]);

        let two = Poset::build(["a", "b"], [("a", "b")]).unwrap();
        let gens: Vec<String> = generators(&two, &Limits::default())
            .unwrap()
            .iter()
            .map(|m| m.display(&two).to_string())
            .collect();
        assert_eq!(gens, vec!["T", "T Xa", "T Xa Xb"]);
    }

    #[test]
    fn phi_of_named_ideals() {
        let p = zigzag();
        let i = PosetIdeal::from_names(&p, &["2", "4"]).unwrap();
        assert_eq!(phi(&p, &i).display(&p).to_string(), "T X2 X4");
        assert_eq!(phi(&p, &PosetIdeal::empty()).display(&p).to_string(), "T");
        assert!(matches!(
            PosetIdeal::from_names(&p, &["4"]),
            Err(Error::NotDownClosed(_))
        ));
    }

    #[test]
    fn semigroup_membership() {
        let p = zigzag();
        assert!(in_semigroup(&p, 4, &[3, 2, 2, 1]));
        assert!(!in_semigroup(&p, 2, &[3, 0, 0, 0]));
        assert!(!in_semigroup(&p, 2, &[1, -1, 0, 0]));
        // 1 <= 3 needs s(1) >= s(3)
        assert!(!in_semigroup(&p, 2, &[0, 1, 1, 0]));
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&zigzag()), 5);
        assert_eq!(dimension(&Poset::empty()), 1);
    }

    #[test]
    fn cone_vectors() {
        let l = Limits::default();
        assert_eq!(
            cone_generators(&point(), &l).unwrap(),
            vec![vec![1, 0], vec![1, 1]]
        );
        assert_eq!(cone_generators(&Poset::empty(), &l).unwrap(), vec![vec![1]]);
        let p = zigzag();
        let ideals = enumerate_ideals(&p, &l).unwrap();
        let cone = cone_generators(&p, &l).unwrap();
        assert_eq!(cone.len(), 8);
        for (ideal, v) in ideals.iter().zip(&cone) {
            let expect: Vec<u8> = std::iter::once(1)
                .chain((0..4).map(|x| u8::from(ideal.contains(x))))
                .collect();
            assert_eq!(v, &expect);
        }
    }

    #[test]
    fn monomial_arithmetic() {
        let p = zigzag();
        let a = phi(&p, &PosetIdeal::from_names(&p, &["1"]).unwrap());
        let b = phi(&p, &PosetIdeal::from_names(&p, &["2", "4"]).unwrap());
        let ab = &a * &b;
        assert_eq!(ab.t_degree(), 2);
        assert_eq!(ab.divide(&p, &b), Some(a.clone()));
        assert_eq!(a.pow(3).display(&p).to_string(), "T^3 X1^3");
        assert_eq!(HibiMonomial::one(4).display(&p).to_string(), "1");
    }
}
