#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::OnceLock;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use toric_contact::lattice::{rat, IntMat, Rat};
use toric_contact::polytope::{LabeledFacet, LabeledPolytope};
use toric_contact::sphere::{weighted_simplex, WeightVector};
use toric_contact::ToricContactDatum;

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn rv(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat(x)).collect()
}

pub fn sphere(a: &[u64]) -> ToricContactDatum {
    weighted_simplex(&WeightVector::new(a.to_vec()).unwrap()).unwrap()
}

pub fn standard_simplex(n: usize) -> ToricContactDatum {
    sphere(&vec![1; n + 1])
}

/// Every weight vector of length `len` with entries in `1..=max` and gcd 1.
pub fn weight_vectors(len: usize, max: u64) -> Vec<Vec<u64>> {
    (0..len)
        .map(|_| 1..=max)
        .multi_cartesian_product()
        .filter(|a| a.iter().fold(0u64, |g, &x| g.gcd(&x)) == 1)
        .collect()
}

/// Unit cube in the hyperplane `α_0 = 1` of `R^4`, with label 2 on the last
/// of the three upper facets.
pub fn cube() -> ToricContactDatum {
    let facets = vec![
        LabeledFacet::from_i64(&[0, -1, 0, 0], 1, rat(0)).unwrap(),
        LabeledFacet::from_i64(&[0, 0, -1, 0], 1, rat(0)).unwrap(),
        LabeledFacet::from_i64(&[0, 0, 0, -1], 1, rat(0)).unwrap(),
        LabeledFacet::from_i64(&[-1, 1, 0, 0], 1, rat(0)).unwrap(),
        LabeledFacet::from_i64(&[-1, 0, 1, 0], 1, rat(0)).unwrap(),
        LabeledFacet::from_i64(&[-1, 0, 0, 1], 2, rat(0)).unwrap(),
    ];
    ToricContactDatum::new(LabeledPolytope::new(4, facets).unwrap(), &big(&[1, 0, 0, 0])).unwrap()
}

/// The unit square `[0,1]²` written with nonzero offsets, `ς = e_0`.
pub fn offset_square() -> ToricContactDatum {
    let facets = vec![
        LabeledFacet::from_i64(&[0, -1, 0], 1, rat(0)).unwrap(),
        LabeledFacet::from_i64(&[0, 0, -1], 1, rat(0)).unwrap(),
        LabeledFacet::from_i64(&[0, 1, 0], 1, rat(1)).unwrap(),
        LabeledFacet::from_i64(&[0, 0, 1], 3, rat(3)).unwrap(),
    ];
    ToricContactDatum::new(LabeledPolytope::new(3, facets).unwrap(), &big(&[1, 0, 0])).unwrap()
}

/// Standard simplices for n = 1..4, weighted simplices with entries at most 4
/// and n at most 3, and the labeled cube.
pub fn corpus() -> &'static [(String, ToricContactDatum)] {
    static CORPUS: OnceLock<Vec<(String, ToricContactDatum)>> = OnceLock::new();
    CORPUS.get_or_init(build_corpus)
}

fn build_corpus() -> Vec<(String, ToricContactDatum)> {
    let mut out: Vec<(String, ToricContactDatum)> =
        (1..=4).map(|n| (format!("standard simplex n={n}"), standard_simplex(n))).collect();
    for len in 2..=4 {
        for a in weight_vectors(len, 4) {
            out.push((format!("weighted simplex a={a:?}"), sphere(&a)));
        }
    }
    out.push(("labeled cube".to_string(), cube()));
    out
}

/// Applies the unimodular `c` to every normal and to ς.
pub fn change_basis(d: &ToricContactDatum, c: &IntMat) -> ToricContactDatum {
    let facets = d
        .polytope()
        .facets()
        .iter()
        .map(|f| LabeledFacet::new(c.mul_vec(f.normal()), f.label().clone(), f.offset().clone()).unwrap())
        .collect();
    let reeb = c.mul_vec(&d.integral_reeb().unwrap());
    ToricContactDatum::new(LabeledPolytope::new(d.ambient_dim(), facets).unwrap(), &reeb).unwrap()
}

// ---------------------------------------------------------------------------
// Oracles. Nothing below calls into the library's normal forms.

pub fn det_i128(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0],
        _ => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det_i128(&minor)
            })
            .sum(),
    }
}

fn to_i128(m: &IntMat) -> Vec<Vec<i128>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_i128().expect("small entries")).collect()).collect()
}

/// gcd of all k×k minors.
pub fn determinantal_divisor(m: &[Vec<i128>], k: usize) -> i128 {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut g: i128 = 0;
    for rs in (0..rows).combinations(k) {
        for cs in (0..cols).combinations(k) {
            let sub: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
            g = g.gcd(&det_i128(&sub));
        }
    }
    g
}

/// Invariant factors as ratios of consecutive determinantal divisors.
pub fn invariant_factors_by_minors(m: &IntMat) -> Vec<BigInt> {
    let m = to_i128(m);
    let mut out = Vec::new();
    let mut prev: i128 = 1;
    for k in 1..=m.len().min(m.first().map_or(0, Vec::len)) {
        let d = determinantal_divisor(&m, k);
        if d == 0 {
            break;
        }
        out.push(BigInt::from(d / prev));
        prev = d;
    }
    out
}

pub fn rank_by_minors(m: &IntMat) -> usize {
    invariant_factors_by_minors(m).len()
}

/// All nonzero integer vectors in `[-bound, bound]^cols` killed by `m`.
pub fn brute_force_kernel(m: &IntMat, bound: i64) -> Vec<Vec<BigInt>> {
    (0..m.cols())
        .map(|_| -bound..=bound)
        .multi_cartesian_product()
        .filter(|v| v.iter().any(|&x| x != 0))
        .map(|v| big(&v))
        .filter(|v| m.mul_vec(v).iter().all(Zero::is_zero))
        .collect()
}

/// Number of times `t ∈ [0, 1)` at which `e^{2πi a_j t}` is 1 for every `j`
/// in the support: the order of the stabilizer of the Reeb circle at a point
/// whose nonzero coordinates are exactly `support`.
pub fn orbit_return_count(a: &[u64], support: &BTreeSet<usize>) -> u64 {
    let j0 = *support.iter().next().expect("nonempty support");
    let q = a[j0];
    (0..q).filter(|&k| support.iter().all(|&j| (a[j] * k).is_multiple_of(q))).count() as u64
}

/// Solves a square rational system by Cramer's rule.
pub fn cramer(rows: &[Vec<Rat>], rhs: &[Rat]) -> Option<Vec<Rat>> {
    fn det(m: &[Vec<Rat>]) -> Rat {
        let n = m.len();
        if n == 0 {
            return rat(1);
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<Rat>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let s = if j % 2 == 0 { rat(1) } else { rat(-1) };
                s * &m[0][j] * det(&minor)
            })
            .sum()
    }
    let d = det(rows);
    if d.is_zero() {
        return None;
    }
    Some(
        (0..rows.len())
            .map(|j| {
                let replaced: Vec<Vec<Rat>> = rows
                    .iter()
                    .zip(rhs)
                    .map(|(row, b)| {
                        let mut r = row.clone();
                        r[j] = b.clone();
                        r
                    })
                    .collect();
                det(&replaced) / &d
            })
            .collect(),
    )
}

/// Vertices of a polytope found by solving every system of `n` facets plus
/// the hyperplane and keeping the feasible solutions.
pub fn brute_force_vertices(p: &LabeledPolytope, reeb: &[Rat]) -> BTreeSet<Vec<Rat>> {
    let n = p.dim();
    let mut out = BTreeSet::new();
    for combo in (0..p.len()).combinations(n) {
        let mut rows = vec![reeb.to_vec()];
        let mut rhs = vec![rat(1)];
        for &i in &combo {
            let f = &p.facets()[i];
            rows.push(f.scaled_normal().into_iter().map(Rat::from_integer).collect());
            rhs.push(f.offset().clone());
        }
        if let Some(x) = cramer(&rows, &rhs) {
            if p.facets().iter().all(|f| !f.slack(&x).is_positive()) {
                out.insert(x);
            }
        }
    }
    out
}
