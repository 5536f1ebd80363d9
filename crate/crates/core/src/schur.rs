//! Skew Schur polynomials.
//!
//! Two independent routes: [`skew_schur`] sums tableau weights symbolically,
//! one letter at a time, and [`skew_schur_eval`] evaluates `det(h[outer_i - inner_j - i + j])` at an
//! integer point with fraction-free elimination.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partition::SkewShape;
use crate::poly::{Monomial, Polynomial};

/// Every `next` with `nu <= next <= outer` such that `next / nu` is a
/// horizontal strip.
fn horizontal_strips(nu: &[u32], outer: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(nu.len());
    fn go(j: usize, nu: &[u32], outer: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if j == nu.len() {
            out.push(cur.clone());
            return;
        }
        let hi = if j == 0 { outer[0] } else { outer[j].min(nu[j - 1]) };
        for v in nu[j]..=hi {
            cur.push(v);
            go(j + 1, nu, outer, cur, out);
            cur.pop();
        }
    }
    go(0, nu, outer, &mut cur, &mut out);
    out
}

/// Sum of the weights of all `n`-semistandard tableaux of `shape`.
///
/// The cells holding letter `i` form a horizontal strip, so a tableau is a
/// chain `inner = nu_0 <= nu_1 <= ... <= nu_n = outer` of horizontal strips.
/// Weights are accumulated per intermediate partition.
pub fn skew_schur(shape: &SkewShape, n: u32) -> Polynomial {
    let outer = shape.outer().parts().to_vec();
    let inner: Vec<u32> = (1..=outer.len()).map(|i| shape.inner().row(i)).collect();
    let size = |p: &[u32]| p.iter().map(|&v| u64::from(v)).sum::<u64>();
    let mut layer: HashMap<Vec<u32>, HashMap<Vec<u32>, BigInt>> = HashMap::new();
    layer.entry(inner).or_default().insert(Vec::new(), BigInt::one());
    for _ in 0..n {
        let mut next: HashMap<Vec<u32>, HashMap<Vec<u32>, BigInt>> = HashMap::new();
        for (nu, terms) in &layer {
            let base = size(nu);
            for grown in horizontal_strips(nu, &outer) {
                let d = (size(&grown) - base) as u32;
                let target = next.entry(grown).or_default();
                for (exp, c) in terms {
                    let mut e = exp.clone();
                    e.push(d);
                    *target.entry(e).or_default() += c;
                }
            }
        }
        layer = next;
    }
    let mut p = Polynomial::zero(n as usize);
    for (exp, c) in layer.remove(&outer).unwrap_or_default() {
        p.add_term(Monomial::new(exp), c);
    }
    p
}

/// Complete homogeneous symmetric polynomials `h_0 ..= h_max_degree`
/// evaluated at `point`.
pub fn complete_homogeneous(point: &[BigInt], max_degree: usize) -> Vec<BigInt> {
    let mut h = vec![BigInt::zero(); max_degree + 1];
    h[0] = BigInt::one();
    for x in point {
        // h_d(x_1..x_k) = h_d(x_1..x_{k-1}) + x_k h_{d-1}(x_1..x_k)
        for d in 1..=max_degree {
            let prev = &h[d - 1] * x;
            h[d] += prev;
        }
    }
    h
}

/// Evaluates `s_{outer/inner}` at `point` through the Jacobi-Trudi
/// determinant. Works on raw part sequences; inner sequences that are not
/// contained in the outer one give zero.
pub fn jacobi_trudi_eval(outer: &[u32], inner: &[u32], point: &[BigInt]) -> BigInt {
    let rows = outer.len().max(inner.len());
    if rows == 0 {
        return BigInt::one();
    }
    let part = |p: &[u32], i: usize| i64::from(p.get(i).copied().unwrap_or(0));
    let max_degree = outer.first().copied().unwrap_or(0) as usize + rows;
    let h = complete_homogeneous(point, max_degree);
    let entry = |d: i64| -> BigInt {
        if d < 0 {
            BigInt::zero()
        } else {
            h[d as usize].clone()
        }
    };
    let matrix: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| (0..rows).map(|j| entry(part(outer, i) - part(inner, j) - i as i64 + j as i64)).collect())
        .collect();
    bareiss_determinant(matrix)
}

pub fn skew_schur_eval(shape: &SkewShape, point: &[BigInt]) -> BigInt {
    jacobi_trudi_eval(shape.outer().parts(), shape.inner().parts(), point)
}

/// Determinant of a square integer matrix by Bareiss fraction-free
/// elimination. Every division is exact.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{skew_shapes, Partition};
    use crate::tableau::enumerate_ssyt;

    fn shape(outer: &[i64], inner: &[i64]) -> SkewShape {
        SkewShape::new(
            Partition::new(outer.iter().copied()).unwrap(),
            Partition::new(inner.iter().copied()).unwrap(),
        )
        .unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Cofactor expansion, for checking the elimination.
    fn laplace(m: &[Vec<BigInt>]) -> BigInt {
        if m.is_empty() {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for c in 0..m.len() {
            let minor: Vec<Vec<BigInt>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = &m[0][c] * laplace(&minor);
            if c % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    #[test]
    fn enumeration_examples() {
        let p = skew_schur(&shape(&[1], &[]), 3);
        assert_eq!(p.to_string(), "x1 + x2 + x3");
        let p = skew_schur(&shape(&[1, 1], &[1]), 2);
        assert_eq!(p.to_string(), "x1 + x2");
        assert!(skew_schur(&shape(&[1, 1, 1], &[]), 2).is_zero());
        let p = skew_schur(&shape(&[2, 1], &[]), 2);
        let mut want = Polynomial::zero(2);
        want.add_term(Monomial::new(vec![2, 1]), 1.into());
        want.add_term(Monomial::new(vec![1, 2]), 1.into());
        assert_eq!(&p * &Polynomial::one(2), want);
    }

    #[test]
    fn strips_agree_with_tableau_enumeration() {
        for s in skew_shapes(5) {
            for n in 0..=3 {
                let mut want = Polynomial::zero(n as usize);
                for t in enumerate_ssyt(&s, n) {
                    want.add_term(t.weight(), BigInt::one());
                }
                if n == 0 && s.size() == 0 {
                    want = Polynomial::one(0);
                }
                assert_eq!(skew_schur(&s, n), want, "{s} in {n} variables");
            }
        }
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(skew_schur_eval(&shape(&[1], &[]), &ints(&[1, 1, 1])), 3.into());
        assert_eq!(skew_schur_eval(&shape(&[2, 1], &[]), &ints(&[1, 1])), 2.into());
        assert_eq!(skew_schur_eval(&shape(&[1, 1, 1], &[]), &ints(&[3, 4])), 0.into());
        assert_eq!(skew_schur_eval(&SkewShape::default(), &ints(&[3, 4])), 1.into());
        // Not contained: zero.
        assert_eq!(jacobi_trudi_eval(&[2], &[1, 1], &ints(&[1, 2, 3])), 0.into());
    }

    #[test]
    fn complete_homogeneous_small() {
        // h_2(2,3) = 4 + 6 + 9
        assert_eq!(complete_homogeneous(&ints(&[2, 3]), 2), ints(&[1, 5, 19]));
    }

    #[test]
    fn bareiss_agrees_with_laplace() {
        let mats: Vec<Vec<Vec<i64>>> = vec![
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
            vec![vec![0, 1, 2], vec![3, 0, 1], vec![4, 5, 0]],
            vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]],
            vec![vec![1, 2], vec![2, 4]],
            vec![vec![0, 2, 0, 1], vec![1, 0, 3, 0], vec![0, 0, 0, 2], vec![4, 1, 0, 0]],
        ];
        for m in mats {
            let big: Vec<Vec<BigInt>> = m.iter().map(|r| ints(r)).collect();
            assert_eq!(bareiss_determinant(big.clone()), laplace(&big));
        }
    }

    #[test]
    fn disconnected_shape_factors() {
        // (3,1)/(1) splits into a row of 2 and a single cell.
        let n = 3;
        let whole = skew_schur(&shape(&[3, 1], &[1]), n);
        let row = skew_schur(&shape(&[2], &[]), n);
        let cell = skew_schur(&shape(&[1], &[]), n);
        assert_eq!(whole, &row * &cell);
        // (2,2,1)/(2,1): a single cell above a disjoint single cell.
        let whole = skew_schur(&shape(&[2, 2, 1], &[2, 1]), n);
        assert_eq!(whole, &cell * &cell);
    }
}
