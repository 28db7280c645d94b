#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tropval::arrangement::ToricArrangement;
use tropval::exact::{Field, Scalar};
use tropval::polynomial::Polynomial;
use tropval::semiring::{EngineConfig, SemiringProfile};

pub fn q(v: i64) -> Scalar {
    Scalar::from_i64(Field::Rational, v)
}

/// Coordinate axes in `F^r`.
pub fn axes(r: usize) -> ToricArrangement {
    let rows: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
    ToricArrangement::rational_lines(&rows).unwrap()
}

/// Lines through `(1, s)` for each slope `s = num/den`.
pub fn planar_with_slopes(slopes: &[(i64, i64)]) -> ToricArrangement {
    let rows = slopes
        .iter()
        .map(|&(num, den)| vec![q(1), Scalar::parse(Field::Rational, &format!("{num}/{den}")).unwrap()])
        .collect();
    ToricArrangement::new(Field::Rational, rows, None).unwrap()
}

/// `(1,0), (0,1), (1,1), (1,2), …`.
pub fn planar(r: usize) -> ToricArrangement {
    let mut rows = vec![vec![1, 0], vec![0, 1]];
    for k in 1..r as i64 - 1 {
        rows.push(vec![1, k]);
    }
    ToricArrangement::rational_lines(&rows[..r]).unwrap()
}

/// Distinct random slopes `p/q` with `|p| ≤ 40`, `1 ≤ q ≤ 9`.
pub fn random_slopes(rng: &mut ChaCha8Rng, r: usize) -> Vec<(i64, i64)> {
    let mut seen: Vec<Scalar> = Vec::new();
    let mut out = Vec::new();
    while out.len() < r {
        let (num, den) = (rng.gen_range(-40..=40), rng.gen_range(1..=9));
        let s = Scalar::parse(Field::Rational, &format!("{num}/{den}")).unwrap();
        if !seen.contains(&s) {
            seen.push(s);
            out.push((num, den));
        }
    }
    out
}

/// Three coordinate lines and a fourth line off every coordinate plane.
pub fn variation_uniform() -> ToricArrangement {
    ToricArrangement::rational_lines(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 2, 3]]).unwrap()
}

/// Lines 2, 3, 4 lie in the plane `x1 = 0`.
pub fn variation_coplanar() -> ToricArrangement {
    ToricArrangement::rational_lines(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![0, 2, 3]]).unwrap()
}

/// Two cusps `t ↦ (t^2, t^3)` and `t ↦ (2t^2, t^3)`.
pub fn cusp_pair() -> ToricArrangement {
    ToricArrangement::new(Field::Rational, vec![vec![q(1), q(1)], vec![q(2), q(1)]], Some(vec![vec![2, 3], vec![2, 3]])).unwrap()
}

pub fn planar_mod(p: u64, r: usize) -> ToricArrangement {
    let f = Field::Prime(p);
    let mut rows = vec![vec![Scalar::one(f), Scalar::zero(f)], vec![Scalar::zero(f), Scalar::one(f)]];
    for k in 1..r as i64 - 1 {
        rows.push(vec![Scalar::one(f), Scalar::from_i64(f, k)]);
    }
    rows.truncate(r);
    ToricArrangement::new(f, rows, None).unwrap()
}

/// Named arrangements covered by the golden and property suites.
pub fn golden() -> Vec<(&'static str, ToricArrangement)> {
    vec![
        ("axes-2", axes(2)),
        ("axes-3", axes(3)),
        ("axes-4", axes(4)),
        ("planar-3", planar(3)),
        ("planar-4", planar(4)),
        ("planar-5", planar(5)),
        ("variation-uniform", variation_uniform()),
        ("variation-coplanar", variation_coplanar()),
        ("cusp-pair", cusp_pair()),
        ("planar-3-mod-5", planar_mod(5, 3)),
        ("planar-4-mod-7", planar_mod(7, 4)),
    ]
}

pub fn engine(arr: ToricArrangement) -> SemiringProfile {
    SemiringProfile::new(arr, EngineConfig::default()).unwrap()
}

pub fn random_scalar(rng: &mut ChaCha8Rng, field: Field) -> Scalar {
    match field {
        Field::Rational => Scalar::from_i64(field, rng.gen_range(-5..=5)),
        Field::Prime(p) => Scalar::from_i64(field, rng.gen_range(0..p) as i64),
    }
}

/// Random polynomial with up to `terms` monomials of total degree `≤ deg`.
pub fn random_polynomial(rng: &mut ChaCha8Rng, arr: &ToricArrangement, deg: u32, terms: usize) -> Polynomial {
    let n = arr.n();
    let mut f = Polynomial::zero(arr.field(), n);
    for _ in 0..rng.gen_range(0..=terms) {
        let mut e = vec![0u32; n];
        let mut left = rng.gen_range(0..=deg);
        while left > 0 {
            e[rng.gen_range(0..n)] += 1;
            left -= 1;
        }
        f.add_term(e, random_scalar(rng, arr.field()));
    }
    f
}

/// Polynomial that is forced to vanish to high order on some branches:
/// a product of random linear or weighted-homogeneous factors.
pub fn random_structured_polynomial(rng: &mut ChaCha8Rng, arr: &ToricArrangement) -> Polynomial {
    let mut f = Polynomial::one(arr.field(), arr.n());
    for _ in 0..rng.gen_range(0..=3) {
        f = f.mul(&random_polynomial(rng, arr, 2, 3));
    }
    f
}
