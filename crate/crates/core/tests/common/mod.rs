//! Brute-force oracles, written without the library's algebra.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Partitions of `n`, descending lex.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Fills the cells of `shape` row by row with entries `1..=n`, weakly
/// increasing along rows and strictly down columns, and hands each filling's
/// content vector to `visit`. With `cap`, entry `v` is used at most
/// `cap[v-1]` times.
fn for_each_ssyt(shape: &[usize], n: usize, cap: Option<&[usize]>, visit: &mut dyn FnMut(&[usize])) {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut content = vec![0; n];
    fn go(
        i: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        content: &mut Vec<usize>,
        n: usize,
        cap: Option<&[usize]>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if i == cells.len() {
            visit(content);
            return;
        }
        let (r, c) = cells[i];
        let left = if c > 0 { grid[r][c - 1] } else { 1 };
        let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in left.max(above)..=n {
            if cap.is_some_and(|cap| content[v - 1] >= cap[v - 1]) {
                continue;
            }
            grid[r][c] = v;
            content[v - 1] += 1;
            go(i + 1, cells, grid, content, n, cap, visit);
            content[v - 1] -= 1;
        }
    }
    go(0, &cells, &mut grid, &mut content, n, cap, visit);
}

/// `K_{λμ}` by counting fillings of shape `λ` with content `μ`.
pub fn kostka(lambda: &[usize], mu: &[usize]) -> BigInt {
    let n = mu.len();
    let mut count = BigInt::zero();
    if lambda.len() > n {
        return count;
    }
    for_each_ssyt(lambda, n, Some(mu), &mut |c| {
        if c == mu {
            count += 1;
        }
    });
    count
}

/// `s_λ(x_1, …, x_n)` as exponent vector ↦ coefficient.
pub fn schur_poly(lambda: &[usize], n: usize) -> HashMap<Vec<usize>, BigInt> {
    let mut out: HashMap<Vec<usize>, BigInt> = HashMap::new();
    if lambda.len() > n {
        return out;
    }
    for_each_ssyt(lambda, n, None, &mut |c| {
        *out.entry(c.to_vec()).or_insert_with(BigInt::zero) += 1;
    });
    out
}

fn pad(p: &[usize], n: usize) -> Vec<usize> {
    let mut v = p.to_vec();
    v.resize(n, 0);
    v
}

/// Coefficients of `s_λ s_μ` in the monomial basis, computed by multiplying
/// the polynomials in `|λ|+|μ|` variables and reading off the exponents that
/// are partitions.
pub fn product_monomial_coeffs(lambda: &[usize], mu: &[usize]) -> BTreeMap<Vec<usize>, BigInt> {
    let n: usize = lambda.iter().sum::<usize>() + mu.iter().sum::<usize>();
    let a = schur_poly(lambda, n.max(1));
    let b = schur_poly(mu, n.max(1));
    let mut out = BTreeMap::new();
    for nu in partitions(n) {
        let target = pad(&nu, n.max(1));
        let mut c = BigInt::zero();
        for (alpha, x) in &a {
            if alpha.iter().zip(&target).any(|(p, q)| p > q) {
                continue;
            }
            let rest: Vec<usize> = target.iter().zip(alpha).map(|(q, p)| q - p).collect();
            if let Some(y) = b.get(&rest) {
                c += x * y;
            }
        }
        if !c.is_zero() {
            out.insert(nu, c);
        }
    }
    out
}

/// Monomial coefficients of `Σ c_κ s_κ`, via SSYT counts.
pub fn schur_sum_monomial_coeffs(terms: &[(Vec<usize>, BigInt)]) -> BTreeMap<Vec<usize>, BigInt> {
    let mut out = BTreeMap::new();
    for (kappa, c) in terms {
        let n: usize = kappa.iter().sum();
        for nu in partitions(n) {
            let k = kostka(kappa, &nu);
            if !k.is_zero() {
                *out.entry(nu).or_insert_with(BigInt::zero) += c * k;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `χ^λ(ρ)` by removing border strips, using beta-numbers.
pub fn character(lambda: &[usize], rho: &[usize]) -> BigInt {
    let len = lambda.len();
    let beta: Vec<i64> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| (p + len - 1 - i) as i64)
        .collect();
    fn go(beta: &[i64], rho: &[usize]) -> BigInt {
        let Some((&r, rest)) = rho.split_first() else {
            return BigInt::one();
        };
        let r = r as i64;
        let mut total = BigInt::zero();
        for (i, &b) in beta.iter().enumerate() {
            let target = b - r;
            if target < 0 || beta.contains(&target) {
                continue;
            }
            let between = beta.iter().filter(|&&x| target < x && x < b).count();
            let mut next = beta.to_vec();
            next[i] = target;
            let sign = if between % 2 == 0 { 1 } else { -1 };
            total += go(&next, rest) * sign;
        }
        total
    }
    go(&beta, rho)
}

fn z(rho: &[usize]) -> BigInt {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in rho {
        *counts.entry(p).or_default() += 1;
    }
    let mut out = BigInt::one();
    for (p, m) in counts {
        for j in 1..=m {
            out *= BigInt::from(p) * BigInt::from(j);
        }
    }
    out
}

/// A polynomial in `t` with rational coefficients, low degree first.
pub type RatPoly = Vec<BigRational>;

fn rp_mul(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `s_i[X(t-1)]` in the Schur basis: expand `s_i = Σ_ρ p_ρ / z_ρ`, replace
/// each `p_k` by `(t^k - 1) p_k`, then write `p_ρ = Σ_λ χ^λ(ρ) s_λ`.
pub fn hook_plethysm(i: usize) -> BTreeMap<Vec<usize>, RatPoly> {
    let mut out: BTreeMap<Vec<usize>, RatPoly> = BTreeMap::new();
    for rho in partitions(i) {
        let mut factor: RatPoly = vec![BigRational::one()];
        for &k in &rho {
            let mut f = vec![BigRational::zero(); k + 1];
            f[0] = -BigRational::one();
            f[k] = BigRational::one();
            factor = rp_mul(&factor, &f);
        }
        let zr = BigRational::from_integer(z(&rho));
        for lambda in partitions(i) {
            let chi = character(&lambda, &rho);
            if chi.is_zero() {
                continue;
            }
            let scale = BigRational::from_integer(chi) / &zr;
            let slot = out.entry(lambda).or_default();
            if slot.len() < factor.len() {
                slot.resize(factor.len(), BigRational::zero());
            }
            for (d, c) in factor.iter().enumerate() {
                slot[d] += c * &scale;
            }
        }
    }
    for v in out.values_mut() {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    }
    out.retain(|_, v| !v.is_empty());
    out
}
