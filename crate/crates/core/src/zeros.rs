//! Zero counts of forms on X and of their pullbacks on the unit torus.
//!
//! A form F(t_1, .., t_s) pulls back to f(x_1, .., x_n) by substituting each
//! edge variable with its edge monomial. Since X is the image of a group
//! homomorphism with fibers of equal size, `|Z(F) ∩ X|` equals the number of
//! unit zeros of f divided by `(q-1)^n / |X|`, which is `(q-1)^2` for an
//! even cycle.

use alloc::vec;
use alloc::vec::Vec;

use crate::gfq::{Elem, FiniteField};
use crate::graph::Graph;
use crate::poly::Polynomial;
use crate::toricset::ToricSet;
use crate::{check_budget, checked_pow, Error, Result};

/// Which linear forms a max-zeros search ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormClass {
    /// Some coefficient is zero.
    Incomplete,
    /// Every coefficient is nonzero.
    Complete,
    All,
}

impl FormClass {
    pub fn contains(self, coeffs: &[Elem]) -> bool {
        let complete = coeffs.iter().all(|c| !c.is_zero());
        match self {
            FormClass::Incomplete => !complete,
            FormClass::Complete => complete,
            FormClass::All => true,
        }
    }
}

/// Substitutes `t_k ↦ x_i x_j` for every edge `k = {i, j}`, collecting like terms.
pub fn pullback(field: &FiniteField, form: &Polynomial, graph: &Graph) -> Result<Polynomial> {
    let s = graph.edge_count();
    if form.nvars() != s {
        return Err(Error::ArityMismatch { expected: s, found: form.nvars() });
    }
    form.homogeneous_degree()?;
    let n = graph.vertex_count();
    let mut out = Polynomial::zero(n);
    for (exps, c) in form.terms() {
        let mut x = vec![0u32; n];
        for (&(a, b), &e) in graph.edges().iter().zip(exps) {
            x[a - 1] += e;
            x[b - 1] += e;
        }
        out.add_term(field, x, c);
    }
    Ok(out)
}

/// Number of points of `(F*)^n` where every polynomial vanishes, by direct
/// evaluation of each tuple.
pub fn z_count_naive(fs: &[Polynomial], n: usize, field: &FiniteField, budget: u64) -> Result<u64> {
    for f in fs {
        if f.nvars() != n {
            return Err(Error::ArityMismatch { expected: n, found: f.nvars() });
        }
    }
    check_budget(checked_pow(field.unit_order() as u128, n as u32), budget)?;
    let units: Vec<Elem> = field.nonzero().collect();
    let mut idx = vec![0usize; n];
    let mut point: Vec<Elem> = vec![units[0]; n];
    let mut count = 0u64;
    loop {
        if fs.iter().all(|f| f.evaluate(field, &point).is_zero()) {
            count += 1;
        }
        let mut d = 0;
        while d < n {
            idx[d] += 1;
            if idx[d] < units.len() {
                point[d] = units[idx[d]];
                break;
            }
            idx[d] = 0;
            point[d] = units[0];
            d += 1;
        }
        if d == n {
            return Ok(count);
        }
    }
}

/// Same count as [`z_count_naive`], walking the unit tuples as discrete logs
/// in reflected Gray order: each step multiplies one coordinate by `g^{±1}`,
/// so only the logs of the terms containing that coordinate move.
pub fn z_count(fs: &[Polynomial], n: usize, field: &FiniteField, budget: u64) -> Result<u64> {
    for f in fs {
        if f.nvars() != n {
            return Err(Error::ArityMismatch { expected: n, found: f.nvars() });
        }
    }
    check_budget(checked_pow(field.unit_order() as u128, n as u32), budget)?;
    let order = field.unit_order() as u64;

    struct Term {
        coeff: Elem,
        log: u64,
    }
    let mut polys: Vec<Vec<Term>> = fs
        .iter()
        .map(|f| f.terms().map(|(_, c)| Term { coeff: c, log: 0 }).collect())
        .collect();
    // touches[v] lists (poly, term, exponent mod order) for terms containing x_v.
    let mut touches: Vec<Vec<(usize, usize, u64)>> = vec![Vec::new(); n];
    for (pi, f) in fs.iter().enumerate() {
        for (ti, (exps, _)) in f.terms().enumerate() {
            for (v, &e) in exps.iter().enumerate() {
                if e % order as u32 != 0 {
                    touches[v].push((pi, ti, e as u64 % order));
                }
            }
        }
    }
    let vanishes = |polys: &Vec<Vec<Term>>| {
        polys.iter().all(|terms| {
            terms
                .iter()
                .fold(Elem::ZERO, |acc, t| field.add(acc, field.mul(t.coeff, field.exp(t.log))))
                .is_zero()
        })
    };

    let mut digit = vec![0u64; n];
    let mut rising = vec![true; n];
    let mut count = u64::from(vanishes(&polys));
    loop {
        let mut j = 0;
        loop {
            if j == n {
                return Ok(count);
            }
            if (rising[j] && digit[j] + 1 < order) || (!rising[j] && digit[j] > 0) {
                break;
            }
            rising[j] = !rising[j];
            j += 1;
        }
        let up = rising[j];
        digit[j] = if up { digit[j] + 1 } else { digit[j] - 1 };
        for &(pi, ti, e) in &touches[j] {
            let t = &mut polys[pi][ti];
            t.log = if up { (t.log + e) % order } else { (t.log + order - e) % order };
        }
        if vanishes(&polys) {
            count += 1;
        }
    }
}

/// `|Z(F) ∩ X|` by evaluating F at every point.
pub fn zeros_on_x(form: &Polynomial, x: &ToricSet) -> Result<usize> {
    if form.nvars() != x.ambient_dim() {
        return Err(Error::ArityMismatch { expected: x.ambient_dim(), found: form.nvars() });
    }
    form.homogeneous_degree()?;
    let f = x.field();
    Ok(x.points().iter().filter(|p| form.evaluate(f, p.coords()).is_zero()).count())
}

/// `|Z(F) ∩ X|` through the pullback: `z(f) / ((q-1)^n / |X|)`.
pub fn zeros_via_pullback(form: &Polynomial, x: &ToricSet, budget: u64) -> Result<u64> {
    let g = x.graph();
    let f = pullback(x.field(), form, g)?;
    let z = z_count(&[f], g.vertex_count(), x.field(), budget)?;
    let tuples = checked_pow(x.field().unit_order() as u128, g.vertex_count() as u32)
        .ok_or(Error::OutOfRange("tuple count overflow"))?;
    let m = x.len() as u128;
    if tuples % m != 0 || (z as u128 * m) % tuples != 0 {
        return Err(Error::InexactDivision("zeros_via_pullback"));
    }
    Ok((z as u128 * m / tuples) as u64)
}

/// Nonzero linear forms in `s` variables up to scaling: the first nonzero
/// coefficient is 1. Yields `(q^s - 1)/(q - 1)` coefficient vectors.
pub fn projective_linear_forms(field: &FiniteField, s: usize) -> impl Iterator<Item = Vec<Elem>> + '_ {
    let q = field.order();
    (0..s).flat_map(move |lead| {
        let free = s - 1 - lead;
        let mut digits: Option<Vec<u32>> = Some(vec![0; free]);
        core::iter::from_fn(move || {
            let d = digits.take()?;
            let mut v = vec![Elem::ZERO; s];
            v[lead] = Elem::ONE;
            for (i, &x) in d.iter().enumerate() {
                v[lead + 1 + i] = Elem::new(x as u16);
            }
            let mut next = d;
            let mut i = 0;
            while i < free {
                next[i] += 1;
                if next[i] < q {
                    break;
                }
                next[i] = 0;
                i += 1;
            }
            if i < free {
                digits = Some(next);
            }
            Some(v)
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxZeros {
    pub max: usize,
    /// Every maximizing form in projective normal form, in enumeration order.
    pub maximizers: Vec<Vec<Elem>>,
    /// Number of forms of the class that were examined.
    pub examined: u64,
}

/// Exact max of `|Z(F) ∩ X|` over the nonzero linear forms of `class`.
pub fn max_zeros_search(x: &ToricSet, class: FormClass, budget: u64) -> Result<MaxZeros> {
    let field = x.field();
    let s = x.ambient_dim();
    let q = field.order() as u128;
    let total = checked_pow(q, s as u32).map(|c| (c - 1) / (q - 1));
    check_budget(total, budget)?;
    let mut best = MaxZeros { max: 0, maximizers: Vec::new(), examined: 0 };
    for coeffs in projective_linear_forms(field, s) {
        if !class.contains(&coeffs) {
            continue;
        }
        best.examined += 1;
        let z = linear_zeros(field, &coeffs, x);
        if z > best.max || best.maximizers.is_empty() {
            best.max = z;
            best.maximizers.clear();
        }
        if z == best.max {
            best.maximizers.push(coeffs);
        }
    }
    Ok(best)
}

/// `|Z(F) ∩ X|` for the linear form with the given coefficients.
pub fn linear_zeros(field: &FiniteField, coeffs: &[Elem], x: &ToricSet) -> usize {
    x.points()
        .iter()
        .filter(|p| {
            coeffs
                .iter()
                .zip(p.coords())
                .fold(Elem::ZERO, |acc, (&a, &c)| field.add(acc, field.mul(a, c)))
                .is_zero()
        })
        .count()
}

/// `Σ_{i=1}^{r-1} β_i x_i x_{i+1}` in `n` variables.
pub fn path_form(field: &FiniteField, betas: &[Elem], n: usize) -> Result<Polynomial> {
    if betas.len() + 1 > n {
        return Err(Error::ArityMismatch { expected: n - 1, found: betas.len() });
    }
    Polynomial::from_terms(
        field,
        n,
        betas.iter().enumerate().map(|(i, &b)| {
            let mut e = vec![0; n];
            e[i] = 1;
            e[i + 1] = 1;
            (e, b)
        }),
    )
}
