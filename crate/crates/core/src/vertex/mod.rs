//! Hall–Littlewood vertex operators `B_ℓ`, their vector-indexed products
//! `B_v`, and the Hall–Littlewood functions they build.

mod ops;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::arith::TPoly;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, IntVector, Partition};
use crate::schur::{mul_h, perp_e, perp_h, Basis, SymFunc};

pub use ops::{check_commutation, OpExpr};

/// Longest vector index accepted by [`apply_b_vector`]; the raising-operator
/// expansion has `2^{L(L-1)/2}` terms before merging.
pub const MAX_VECTOR_LEN: usize = 8;

type BCache = RwLock<HashMap<(i64, Partition), Arc<SymFunc>>>;

fn b_cache() -> &'static BCache {
    static CACHE: OnceLock<BCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn require_schur(f: &SymFunc) -> Result<()> {
    if f.basis() != Basis::Schur {
        return Err(Error::BasisMismatch {
            left: Basis::Schur.to_string(),
            right: f.basis().to_string(),
        });
    }
    Ok(())
}

/// `B_ℓ s_λ = Σ_i h_{i+ℓ} · s_i[X(t-1)]^⊥ s_λ`, with the plethystic perp
/// expanded as `Σ_j t^j (-1)^{i-j} h_j^⊥ e_{i-j}^⊥`.
pub fn b_on_schur(ell: i64, lambda: &Partition) -> Arc<SymFunc> {
    let key = (ell, lambda.clone());
    if let Some(hit) = b_cache().read().unwrap().get(&key) {
        return hit.clone();
    }
    let n = lambda.degree();
    let mut out = SymFunc::zero(Basis::Schur);
    if ell + n as i64 >= 0 {
        let s = SymFunc::schur(lambda.clone());
        let e_perps: Vec<SymFunc> = (0..=n).map(|r| perp_e(r, &s)).collect();
        let start = if ell < 0 { (-ell) as usize } else { 0 };
        for i in start..=n {
            let mut g = SymFunc::zero(Basis::Schur);
            for j in 0..=i {
                let e = &e_perps[i - j];
                if e.is_zero() {
                    continue;
                }
                let sign = if (i - j) % 2 == 0 { 1 } else { -1 };
                g.add_scaled(&perp_h(j, e), &TPoly::monomial(sign, j))
                    .expect("Schur basis");
            }
            if g.is_zero() {
                continue;
            }
            let row = (i as i64 + ell) as usize;
            out.add_scaled(&mul_h(row, &g), &TPoly::one())
                .expect("Schur basis");
        }
    }
    let out = Arc::new(out);
    b_cache().write().unwrap().insert(key, out.clone());
    out
}

/// `B_ℓ f` for `f` in the Schur basis.
pub fn apply_b_int(ell: i64, f: &SymFunc) -> Result<SymFunc> {
    require_schur(f)?;
    let mut out = SymFunc::zero(Basis::Schur);
    for (lambda, c) in f.iter() {
        out.add_scaled(&b_on_schur(ell, lambda), c)?;
    }
    Ok(out)
}

/// Expansion of `Π_{i<j} (1 - t e_{ij})` as a map from the total shift
/// vector to its coefficient; `e_{ij}` raises entry `i` and lowers entry `j`.
pub fn raising_expansion(len: usize) -> BTreeMap<Vec<i64>, TPoly> {
    let mut acc: BTreeMap<Vec<i64>, TPoly> = BTreeMap::new();
    acc.insert(vec![0; len], TPoly::one());
    let minus_t = TPoly::from_i64s(&[0, -1]);
    for i in 0..len {
        for j in i + 1..len {
            let mut next = acc.clone();
            for (shift, c) in &acc {
                let mut moved = shift.clone();
                moved[i] += 1;
                moved[j] -= 1;
                let slot = next.entry(moved).or_default();
                slot.add_mul(c, &minus_t);
            }
            next.retain(|_, c| !c.is_zero());
            acc = next;
        }
    }
    acc
}

/// Applies `B_{w_1} ⋯ B_{w_L}` (rightmost first) for every `(w, c)` in
/// `terms` and sums with coefficients, sharing work between indices that
/// agree in their trailing entries.
fn apply_grouped(terms: &[(&[i64], &TPoly)], f: &SymFunc) -> Result<SymFunc> {
    let mut leaf = TPoly::zero();
    let mut groups: BTreeMap<i64, Vec<(&[i64], &TPoly)>> = BTreeMap::new();
    for &(w, c) in terms {
        match w.split_last() {
            None => leaf += c,
            Some((&last, rest)) => groups.entry(last).or_default().push((rest, c)),
        }
    }
    let mut out = f.scale(&leaf);
    let deg = f.degrees().last().copied().unwrap_or(0) as i64;
    for (ell, sub) in groups {
        if ell + deg < 0 {
            continue;
        }
        let g = apply_b_int(ell, f)?;
        if g.is_zero() {
            continue;
        }
        out.add_scaled(&apply_grouped(&sub, &g)?, &TPoly::one())?;
    }
    Ok(out)
}

/// `B_v f` for an arbitrary integer vector `v`, defined by the
/// raising-operator expansion `Π_{i<j}(1 - t e_{ij}) B_{v_1} ⋯ B_{v_L}`.
pub fn apply_b_vector(v: &IntVector, f: &SymFunc) -> Result<SymFunc> {
    require_schur(f)?;
    let len = v.len();
    if len > MAX_VECTOR_LEN {
        return Err(Error::VectorTooLong(len));
    }
    let expansion = raising_expansion(len);
    let shifted: Vec<(Vec<i64>, &TPoly)> = expansion
        .iter()
        .map(|(d, c)| {
            let w = v.entries().iter().zip(d).map(|(a, b)| a + b).collect();
            (w, c)
        })
        .collect();
    let refs: Vec<(&[i64], &TPoly)> = shifted.iter().map(|(w, c)| (w.as_slice(), *c)).collect();
    apply_grouped(&refs, f)
}

/// `B_λ f` for a partition index.
pub fn apply_b_partition(lambda: &Partition, f: &SymFunc) -> Result<SymFunc> {
    apply_b_vector(&lambda.to_vector(), f)
}

type HlCache = RwLock<HashMap<Partition, Arc<SymFunc>>>;

fn hl_cache() -> &'static HlCache {
    static CACHE: OnceLock<HlCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `H_λ[X;t] = B_{λ_1} H_{(λ_2, λ_3, …)}`, in the Schur basis.
pub fn hall_littlewood(lambda: &Partition) -> Arc<SymFunc> {
    if let Some(hit) = hl_cache().read().unwrap().get(lambda) {
        return hit.clone();
    }
    let value = match lambda.parts().split_first() {
        None => SymFunc::one(),
        Some((&head, tail)) => {
            let tail = Partition::new(tail.to_vec()).expect("tail of a partition");
            apply_b_int(head as i64, &hall_littlewood(&tail)).expect("Schur basis")
        }
    };
    let value = Arc::new(value);
    hl_cache().write().unwrap().insert(lambda.clone(), value.clone());
    value
}

/// `K_{μλ}(t)`, the coefficient of `s_μ` in `H_λ`.
pub fn kostka_foulkes(mu: &Partition, lambda: &Partition) -> Result<TPoly> {
    if mu.degree() != lambda.degree() {
        return Err(Error::DegreeMismatch {
            left: mu.clone(),
            right: lambda.clone(),
        });
    }
    Ok(hall_littlewood(lambda).coeff(mu))
}

/// `K(t)` at degree `n`: entry `[i][j]` is `K_{μ_i λ_j}(t)` with partitions in
/// descending lex order. Upper unitriangular.
pub fn kostka_foulkes_matrix(n: usize) -> (Vec<Partition>, Vec<Vec<TPoly>>) {
    let index = partitions_of(n);
    let entries = index
        .iter()
        .map(|mu| {
            index
                .iter()
                .map(|lambda| hall_littlewood(lambda).coeff(mu))
                .collect()
        })
        .collect();
    (index, entries)
}

/// Rewrites an `H`-basis function in the Schur basis.
pub fn hl_to_schur(f: &SymFunc) -> Result<SymFunc> {
    if f.basis() != Basis::HallLittlewood {
        return Err(Error::BasisMismatch {
            left: Basis::HallLittlewood.to_string(),
            right: f.basis().to_string(),
        });
    }
    let mut out = SymFunc::zero(Basis::Schur);
    for (lambda, c) in f.iter() {
        out.add_scaled(&hall_littlewood(lambda), c)?;
    }
    Ok(out)
}

/// Coordinates of a Schur-basis function in the `H` basis. Since
/// `H_μ = s_μ + Σ_{ν > μ} K_{νμ}(t) s_ν`, the lex-smallest surviving term
/// always equals its `H` coordinate.
pub fn schur_to_hl(f: &SymFunc) -> Result<SymFunc> {
    require_schur(f)?;
    let mut residual = f.clone();
    let mut out = SymFunc::zero(Basis::HallLittlewood);
    loop {
        let Some((mu, c)) = residual.iter().next().map(|(p, c)| (p.clone(), c.clone())) else {
            break;
        };
        residual.add_scaled(&hall_littlewood(&mu), &(-&c))?;
        out.add_term(mu, &c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::schur::{hook_plethysm, multiply, perp};

    fn s(terms: &[(&[usize], &[i64])]) -> SymFunc {
        SymFunc::from_terms(
            Basis::Schur,
            terms
                .iter()
                .map(|(p, c)| (Partition::new(p.to_vec()).unwrap(), TPoly::from_i64s(c))),
        )
    }

    #[test]
    fn b_int_examples() {
        assert_eq!(apply_b_int(2, &SymFunc::one()).unwrap(), SymFunc::schur(part![2]));
        assert!(apply_b_int(-1, &SymFunc::one()).unwrap().is_zero());
        assert_eq!(
            apply_b_int(2, &SymFunc::schur(part![1])).unwrap(),
            s(&[(&[2, 1], &[1]), (&[3], &[0, 1])])
        );
        let h11 = s(&[(&[1, 1], &[1]), (&[2], &[0, 1])]);
        assert_eq!(
            apply_b_int(1, &h11).unwrap(),
            s(&[(&[1, 1, 1], &[1]), (&[2, 1], &[0, 1, 1]), (&[3], &[0, 0, 0, 1])])
        );
        // B_0 is not the identity
        assert_eq!(
            apply_b_int(0, &SymFunc::schur(part![1])).unwrap(),
            s(&[(&[1], &[0, 1])])
        );
    }

    #[test]
    fn b_int_matches_plethystic_definition() {
        for lambda in crate::partition::partitions_up_to(4) {
            let f = SymFunc::schur(lambda.clone());
            for ell in -3i64..=3 {
                let mut direct = SymFunc::zero(Basis::Schur);
                for i in 0..=lambda.degree() {
                    if (i as i64) + ell < 0 {
                        continue;
                    }
                    let g = perp(&hook_plethysm(i), &f).unwrap();
                    let row = SymFunc::schur(Partition::row((i as i64 + ell) as usize));
                    direct
                        .add_scaled(&multiply(&row, &g).unwrap(), &TPoly::one())
                        .unwrap();
                }
                assert_eq!(apply_b_int(ell, &f).unwrap(), direct, "B_{ell} s_{lambda}");
            }
        }
    }

    #[test]
    fn b_vector_examples() {
        let v = |x: &[i64]| IntVector::new(x.to_vec());
        assert_eq!(
            apply_b_vector(&v(&[1, 1]), &SymFunc::one()).unwrap(),
            SymFunc::schur(part![1, 1])
        );
        assert_eq!(
            apply_b_vector(&v(&[2, 1]), &SymFunc::one()).unwrap(),
            SymFunc::schur(part![2, 1])
        );
        assert_eq!(
            apply_b_vector(&v(&[]), &SymFunc::schur(part![1])).unwrap(),
            SymFunc::schur(part![1])
        );
        assert!(apply_b_vector(&v(&[2, 3]), &SymFunc::schur(part![1]))
            .unwrap()
            .is_zero());
        assert_eq!(
            apply_b_vector(&v(&[0; 9]), &SymFunc::one()),
            Err(Error::VectorTooLong(9))
        );
    }

    #[test]
    fn raising_expansion_counts() {
        let e = raising_expansion(3);
        let total: i64 = e.values().map(|c| i64::try_from(c.eval_at_one()).unwrap()).sum();
        assert_eq!(total, 0);
        assert_eq!(e[&vec![0, 0, 0]], TPoly::one());
        assert_eq!(raising_expansion(0).len(), 1);
    }

    #[test]
    fn hall_littlewood_examples() {
        assert_eq!(*hall_littlewood(&Partition::empty()), SymFunc::one());
        assert_eq!(
            *hall_littlewood(&part![1, 1]),
            s(&[(&[1, 1], &[1]), (&[2], &[0, 1])])
        );
        assert_eq!(
            *hall_littlewood(&part![2, 1]),
            s(&[(&[2, 1], &[1]), (&[3], &[0, 1])])
        );
        assert_eq!(
            kostka_foulkes(&part![3], &part![1, 1, 1]).unwrap(),
            TPoly::t_pow(3)
        );
        assert!(kostka_foulkes(&part![3], &part![1]).is_err());
    }

    #[test]
    fn hl_round_trip() {
        let f = s(&[(&[2, 1], &[3]), (&[1, 1, 1], &[0, 1]), (&[2], &[1, 1])]);
        let h = schur_to_hl(&f).unwrap();
        assert_eq!(hl_to_schur(&h).unwrap(), f);
        let x = schur_to_hl(&hall_littlewood(&part![2, 2])).unwrap();
        assert_eq!(x, SymFunc::term(Basis::HallLittlewood, part![2, 2], TPoly::one()));
    }
}
