//! LLL reduction and Babai rounding over integer lattices. Only used by the
//! p-adic root reconstruction, so dimensions stay small (`phi(N)`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

fn to_rat(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().map(|x| BigRational::from(x.clone())).collect()
}

/// Gram-Schmidt vectors and coefficients `mu[i][j]` for `j < i`.
fn gram_schmidt(basis: &[Vec<BigInt>]) -> (Vec<Vec<BigRational>>, Vec<Vec<BigRational>>) {
    let n = basis.len();
    let mut star: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    let mut mu = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        let bi = to_rat(&basis[i]);
        let mut v = bi.clone();
        for j in 0..i {
            let denom = dot(&star[j], &star[j]);
            let m = dot(&bi, &star[j]) / denom;
            for (vk, sk) in v.iter_mut().zip(&star[j]) {
                *vk -= &m * sk;
            }
            mu[i][j] = m;
        }
        star.push(v);
    }
    (star, mu)
}

fn round(r: &BigRational) -> BigInt {
    let two = BigInt::from(2);
    let num = r.numer() * &two + r.denom();
    let den = r.denom() * &two;
    num_integer::Integer::div_floor(&num, &den)
}

/// LLL-reduce a basis of linearly independent integer rows, `delta = 3/4`.
#[allow(clippy::needless_range_loop)]
pub fn lll(mut basis: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let n = basis.len();
    let delta = BigRational::new(3.into(), 4.into());
    let (star, mut mu) = gram_schmidt(&basis);
    let mut norm: Vec<BigRational> = star.iter().map(|s| dot(s, s)).collect();
    let mut k = 1;
    while k < n {
        // size reduction leaves the Gram-Schmidt vectors unchanged
        for j in (0..k).rev() {
            let q = round(&mu[k][j]);
            if q.is_zero() {
                continue;
            }
            let bj = basis[j].clone();
            for (x, y) in basis[k].iter_mut().zip(&bj) {
                *x -= &q * y;
            }
            let q = BigRational::from(q);
            for i in 0..j {
                let d = &q * &mu[j][i];
                mu[k][i] -= d;
            }
            mu[k][j] -= q;
        }
        let m = &mu[k][k - 1];
        if norm[k] >= (&delta - m * m) * &norm[k - 1] {
            k += 1;
        } else {
            basis.swap(k, k - 1);
            let m = mu[k][k - 1].clone();
            let b = &norm[k] + &m * &m * &norm[k - 1];
            mu[k][k - 1] = &m * &norm[k - 1] / &b;
            let mu_kk1 = mu[k][k - 1].clone();
            norm[k] = &norm[k - 1] * &norm[k] / &b;
            norm[k - 1] = b;
            let (head, tail) = mu.split_at_mut(k);
            head[k - 1][..k - 1].swap_with_slice(&mut tail[0][..k - 1]);
            for row in mu.iter_mut().skip(k + 1) {
                let t = row[k].clone();
                row[k] = &row[k - 1] - &m * &t;
                row[k - 1] = t + &mu_kk1 * &row[k];
            }
            k = (k - 1).max(1);
        }
    }
    basis
}

/// Babai's nearest-plane approximation to the lattice vector closest to `target`.
pub fn nearest_plane(reduced: &[Vec<BigInt>], target: &[BigInt]) -> Vec<BigInt> {
    let (star, _) = gram_schmidt(reduced);
    let mut residual = to_rat(target);
    let mut closest = vec![BigInt::zero(); target.len()];
    for i in (0..reduced.len()).rev() {
        let c = round(&(dot(&residual, &star[i]) / dot(&star[i], &star[i])));
        if c.is_zero() {
            continue;
        }
        for (k, b) in reduced[i].iter().enumerate() {
            residual[k] -= BigRational::from(&c * b);
            closest[k] += &c * b;
        }
    }
    closest
}

pub fn max_abs(v: &[BigInt]) -> BigInt {
    v.iter().map(|x| x.abs()).max().unwrap_or_else(BigInt::zero)
}
