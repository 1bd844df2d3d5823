use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::arith::TPoly;
use crate::error::{Error, Result};
use crate::partition::{check_k, k_bounded_partitions, Partition};
use crate::schur::{Basis, SymFunc};
use crate::vertex::{apply_b_partition, hl_to_schur, schur_to_hl};

fn check_bounded(lambda: &Partition, k: usize) -> Result<()> {
    check_k(k)?;
    if !lambda.is_k_bounded(k) {
        return Err(Error::NotKBounded {
            partition: lambda.clone(),
            k,
        });
    }
    Ok(())
}

type GCache = RwLock<HashMap<(usize, Partition), Arc<SymFunc>>>;

fn g_cache() -> &'static GCache {
    static CACHE: OnceLock<GCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `G^(k)_λ = B_{λ^(1)} B_{λ^(2)} ⋯ 1` over the k-split blocks of `λ`.
pub fn g_poly(lambda: &Partition, k: usize) -> Result<Arc<SymFunc>> {
    check_bounded(lambda, k)?;
    let key = (k, lambda.clone());
    if let Some(hit) = g_cache().read().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let split = lambda.k_split(k)?;
    let mut f = SymFunc::one();
    for block in split.blocks().iter().rev() {
        f = apply_b_partition(block, &f)?;
    }
    let f = Arc::new(f);
    g_cache().write().unwrap().insert(key, f.clone());
    Ok(f)
}

/// The k-split polynomials of one degree, with their `H` coordinates.
#[derive(Clone, Debug)]
pub struct GBasisTable {
    pub k: usize,
    pub degree: usize,
    /// k-bounded partitions of `degree`, descending lex.
    pub index: Vec<Partition>,
    pub schur: Vec<Arc<SymFunc>>,
    pub hl: Vec<SymFunc>,
    /// Coefficient of `H_λ` in `G_λ` for each `λ` in `index`.
    pub diagonal: Vec<TPoly>,
    position: HashMap<Partition, usize>,
}

impl GBasisTable {
    fn build(k: usize, degree: usize) -> Result<Self> {
        let index = k_bounded_partitions(degree, k);
        let schur = index.iter().map(|l| g_poly(l, k)).collect::<Result<Vec<_>>>()?;
        let hl = schur.iter().map(|g| schur_to_hl(g)).collect::<Result<Vec<_>>>()?;
        let diagonal = index.iter().zip(&hl).map(|(l, h)| h.coeff(l)).collect();
        let position = index.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Ok(GBasisTable {
            k,
            degree,
            index,
            schur,
            hl,
            diagonal,
            position,
        })
    }

    pub fn position(&self, lambda: &Partition) -> Option<usize> {
        self.position.get(lambda).copied()
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    /// `M[i][j]` = coefficient of `H_{index[i]}` in `G_{index[j]}`.
    pub fn transition_matrix(&self) -> Vec<Vec<TPoly>> {
        self.index
            .iter()
            .map(|mu| self.hl.iter().map(|h| h.coeff(mu)).collect())
            .collect()
    }

    /// True when every `G_λ` has `H` support inside the k-bounded
    /// partitions and the transition matrix is upper triangular.
    pub fn is_upper_triangular(&self) -> bool {
        self.hl.iter().enumerate().all(|(j, h)| {
            h.support().all(|mu| match self.position(mu) {
                Some(i) => i <= j,
                None => false,
            })
        })
    }

    pub fn unit_diagonal(&self) -> bool {
        self.diagonal.iter().all(TPoly::is_one)
    }
}

type TableCache = RwLock<HashMap<(usize, usize), Arc<GBasisTable>>>;

fn table_cache() -> &'static TableCache {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub fn g_table(k: usize, degree: usize) -> Result<Arc<GBasisTable>> {
    check_k(k)?;
    if let Some(hit) = table_cache().read().unwrap().get(&(k, degree)) {
        return Ok(hit.clone());
    }
    let table = Arc::new(GBasisTable::build(k, degree)?);
    Ok(table_cache()
        .write()
        .unwrap()
        .entry((k, degree))
        .or_insert(table)
        .clone())
}

/// Result of [`expand_in_g`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GExpansion {
    /// Coordinates in the `G^(k)` basis.
    Member(SymFunc),
    /// The component of the input outside the span, in the Schur basis.
    NonMember { residual: SymFunc },
}

impl GExpansion {
    pub fn member(self, k: usize) -> Result<SymFunc> {
        match self {
            GExpansion::Member(f) => Ok(f),
            GExpansion::NonMember { .. } => Err(Error::NotInKSpace { k }),
        }
    }
}

/// Coordinates of a Schur-basis function in the k-split basis.
///
/// Goes through the `H` basis: the input is in the span exactly when its
/// `H` support is k-bounded, and the `H → G` system is then solved by
/// peeling off the lex-smallest term.
pub fn expand_in_g(f: &SymFunc, k: usize) -> Result<GExpansion> {
    check_k(k)?;
    let mut h = schur_to_hl(f)?;
    let outside = h.filter(|mu| !mu.is_k_bounded(k));
    if !outside.is_zero() {
        return Ok(GExpansion::NonMember {
            residual: hl_to_schur(&outside)?,
        });
    }
    let mut out = SymFunc::zero(Basis::G(k));
    loop {
        let Some((mu, a)) = h.iter().next().map(|(p, c)| (p.clone(), c.clone())) else {
            break;
        };
        let table = g_table(k, mu.degree())?;
        let pos = table.position(&mu).expect("k-bounded support");
        let diag = &table.diagonal[pos];
        let c = if diag.is_one() {
            a
        } else {
            a.exact_divide(diag)
                .map_err(|_| Error::NonPolynomialCoordinates)?
        };
        let g_h = table.hl[pos].clone().relabel(Basis::HallLittlewood);
        h.add_scaled(&g_h, &(-&c))?;
        if h.contains(&mu) {
            // the diagonal did not clear the leading term
            return Err(Error::NonPolynomialCoordinates);
        }
        out.add_term(mu, &c);
    }
    Ok(GExpansion::Member(out))
}

/// Rewrites a `G^(k)`-basis function in the Schur basis.
pub fn g_to_schur(f: &SymFunc) -> Result<SymFunc> {
    let Basis::G(k) = f.basis() else {
        return Err(Error::BasisMismatch {
            left: "G".to_string(),
            right: f.basis().to_string(),
        });
    };
    let mut out = SymFunc::zero(Basis::Schur);
    for (lambda, c) in f.iter() {
        out.add_scaled(&*g_poly(lambda, k)?, c)?;
    }
    Ok(out)
}

/// `T_j^(k) f`: keeps the `G^(k)_λ` terms with `λ_1 = j`.
pub fn project_t(j: usize, k: usize, f: &SymFunc) -> Result<SymFunc> {
    let coords = expand_in_g(f, k)?.member(k)?;
    g_to_schur(&coords.filter(|l| l.first() == j))
}

/// First parts of the `G^(k)` support of `f`.
pub fn omega_support(f: &SymFunc, k: usize) -> Result<BTreeSet<usize>> {
    let coords = expand_in_g(f, k)?.member(k)?;
    Ok(coords.support().map(Partition::first).collect())
}

/// Whether `f` lies in the span of `H_λ` with `a ≤ λ_1 ≤ k`.
pub fn lambda_ak_membership(f: &SymFunc, a: usize, k: usize) -> Result<bool> {
    check_k(k)?;
    let h = schur_to_hl(f)?;
    let inside = h.support().all(|mu| a <= mu.first() && mu.first() <= k);
    Ok(inside)
}
