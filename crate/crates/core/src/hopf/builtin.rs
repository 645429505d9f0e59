//! Builtin example families: group algebras, function algebras, Taft algebras.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::sparse::SparseVec;
use crate::tensor::Tensor;

use super::{FinHopfAlgebra, HopfStructure};

/// A finite group given by its Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    pub name: String,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl Group {
    /// `table[a][b]` is the index of `ab`.
    pub fn from_cayley(name: &str, table: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let n = table.len();
        let bad = |msg: String| Err(Error::Invalid(format!("not a group table: {msg}")));
        if n == 0 || identity >= n {
            return bad("empty or identity out of range".into());
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&c| c >= n)) {
            return bad("table not closed".into());
        }
        for a in 0..n {
            if table[identity][a] != a || table[a][identity] != a {
                return bad(format!("{identity} is not an identity for {a}"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(format!("({a}{b}){c} != {a}({b}{c})"));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == identity && table[b][a] == identity) {
                Some(b) => inverse.push(b),
                None => return bad(format!("{a} has no inverse")),
            }
        }
        let labels = (0..n).map(|i| format!("g{i}")).collect();
        Ok(Group { name: name.to_string(), table, identity, inverse, labels })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order());
        self.labels = labels;
        self
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        Group::from_cayley(&format!("C{n}"), table, 0).expect("cyclic group").with_labels(labels)
    }

    /// Permutations of {0,1,2} in lexicographic order of their images;
    /// composition `(st)(x) = s(t(x))`. Index 0 is the identity.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> =
            vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let find = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
        let table = perms
            .iter()
            .map(|s| perms.iter().map(|t| find([s[t[0]], s[t[1]], s[t[2]]])).collect())
            .collect();
        let labels = vec!["()", "(12)", "(01)", "(012)", "(021)", "(02)"];
        Group::from_cayley("S3", table, 0)
            .expect("S3")
            .with_labels(labels.into_iter().map(String::from).collect())
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// `kG`: `Δg = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra<F: Field>(g: &Group) -> FinHopfAlgebra<F> {
    let n = g.order();
    let one = F::one;
    let mut mult = Tensor::zeros(vec![n, n, n]);
    let mut comult = Tensor::zeros(vec![n, n, n]);
    let mut antipode = Tensor::zeros(vec![n, n]);
    for a in 0..n {
        for b in 0..n {
            mult.set(&[a, b, g.mul(a, b)], one()).expect("in range");
        }
        comult.set(&[a, a, a], one()).expect("in range");
        antipode.set(&[a, g.inv(a)], one()).expect("in range");
    }
    let mut unit = Tensor::zeros(vec![n]);
    unit.set(&[g.identity()], one()).expect("in range");
    let counit = Tensor::vector(&vec![one(); n]);
    FinHopfAlgebra::new(HopfStructure {
        basis_names: g.labels().to_vec(),
        mult,
        unit,
        comult,
        counit,
        antipode,
    })
    .expect("group algebra axioms")
}

/// `k^G` on the basis of point masses `δ_g`.
pub fn function_algebra<F: Field>(g: &Group) -> FinHopfAlgebra<F> {
    let n = g.order();
    let one = F::one;
    let mut mult = Tensor::zeros(vec![n, n, n]);
    let mut comult = Tensor::zeros(vec![n, n, n]);
    let mut antipode = Tensor::zeros(vec![n, n]);
    let mut counit = Tensor::zeros(vec![n]);
    for a in 0..n {
        mult.set(&[a, a, a], one()).expect("in range");
        for b in 0..n {
            comult.set(&[g.mul(a, b), a, b], one()).expect("in range");
        }
        antipode.set(&[a, g.inv(a)], one()).expect("in range");
    }
    counit.set(&[g.identity()], one()).expect("in range");
    let unit = Tensor::vector(&vec![one(); n]);
    FinHopfAlgebra::new(HopfStructure {
        basis_names: g.labels().iter().map(|l| format!("d{l}")).collect(),
        mult,
        unit,
        comult,
        counit,
        antipode,
    })
    .expect("function algebra axioms")
}

/// The `n²`-dimensional Taft algebra: `g^n = 1`, `x^n = 0`, `gx = ζ xg`,
/// `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`, `S(g) = g⁻¹`, `S(x) = -g⁻¹x`.
/// Basis `g^i x^j` at index `i + n j`. `ζ` must have multiplicative order `n`.
pub fn taft<F: Field>(n: usize, zeta: F) -> Result<FinHopfAlgebra<F>> {
    if n < 2 {
        return Err(Error::Invalid("Taft algebra needs n >= 2".into()));
    }
    let order = (1..=n).find(|&k| zeta.pow(k as u64) == F::one());
    if order != Some(n) {
        return Err(Error::Invalid(format!("ζ = {zeta} does not have multiplicative order {n}")));
    }
    let dim = n * n;
    let idx = |i: usize, j: usize| (i % n) + n * j;
    let zeta_inv = zeta.inv()?;
    let mut mult = Tensor::zeros(vec![dim, dim, dim]);
    for (i, j, k, l) in quad(n) {
        if j + l < n {
            // x^j g^k = ζ^{-jk} g^k x^j
            let c = zeta_inv.pow((j * k) as u64);
            mult.set(&[idx(i, j), idx(k, l), idx(i + k, j + l)], c)?;
        }
    }
    let names: Vec<String> = (0..dim)
        .map(|b| {
            let (i, j) = (b % n, b / n);
            let gp = match i {
                0 => String::new(),
                1 => "g".into(),
                _ => format!("g^{i}"),
            };
            let xp = match j {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{j}"),
            };
            if i == 0 && j == 0 {
                "1".into()
            } else {
                format!("{gp}{xp}")
            }
        })
        .collect();
    let mut unit = Tensor::zeros(vec![dim]);
    unit.set(&[0], F::one())?;
    let algebra = crate::algebra::FinAlgebra::from_tensors_unchecked(&mult, &unit)?;

    // Δ and S on generators, extended multiplicatively (S anti-multiplicatively).
    let mul2 = |a: &SparseVec<F>, b: &SparseVec<F>| -> SparseVec<F> {
        let mut out = SparseVec::zero();
        for (p, x) in a.iter() {
            for (q, y) in b.iter() {
                let left = algebra.mul_basis(p / dim, q / dim);
                let right = algebra.mul_basis(p % dim, q % dim);
                for (u, c) in left.iter() {
                    for (v, d) in right.iter() {
                        out.add_term(u * dim + v, x.clone() * y * c * d);
                    }
                }
            }
        }
        out
    };
    let g = SparseVec::basis(idx(1, 0));
    let x = SparseVec::basis(idx(0, 1));
    let one = SparseVec::basis(0);
    let delta_g = g.outer(&g, dim);
    let mut delta_x = x.outer(&one, dim);
    delta_x.add_assign(&g.outer(&x, dim));
    let g_inv = SparseVec::basis(idx(n - 1, 0));
    let s_x = algebra.mul(&g_inv, &x).neg();

    let mut comult = Tensor::zeros(vec![dim, dim, dim]);
    let mut antipode = Tensor::zeros(vec![dim, dim]);
    let mut counit = Tensor::zeros(vec![dim]);
    for i in 0..n {
        counit.set(&[idx(i, 0)], F::one())?;
    }
    for b in 0..dim {
        let (i, j) = (b % n, b / n);
        let mut d = one.outer(&one, dim);
        let mut s = one.clone();
        for _ in 0..i {
            d = mul2(&d, &delta_g);
            s = algebra.mul(&g_inv, &s);
        }
        let mut s_xj = one.clone();
        for _ in 0..j {
            d = mul2(&d, &delta_x);
            s_xj = algebra.mul(&s_x, &s_xj);
        }
        // S(g^i x^j) = S(x)^j S(g)^i
        let s = algebra.mul(&s_xj, &s);
        for (f, c) in d.iter() {
            comult.set(&[b, f / dim, f % dim], c.clone())?;
        }
        for (f, c) in s.iter() {
            antipode.set(&[b, f], c.clone())?;
        }
    }
    FinHopfAlgebra::new(HopfStructure { basis_names: names, mult, unit, comult, counit, antipode })
}

/// Sweedler's four-dimensional algebra, `taft(2, -1)`, basis `{1, g, x, gx}`.
pub fn sweedler<F: Field>() -> FinHopfAlgebra<F> {
    taft(2, -F::one()).expect("sweedler algebra over a field of characteristic != 2")
}

fn quad(n: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..n).flat_map(move |i| {
        (0..n).flat_map(move |j| (0..n).flat_map(move |k| (0..n).map(move |l| (i, j, k, l))))
    })
}
