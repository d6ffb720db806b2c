use num_rational::BigRational;
use num_traits::One;

use super::order::MonomialOrder;
use super::sparse::{coprime, divides, lcm, reduce, div_mono, SPoly};
use super::GroebnerError;

/// Limits for a Buchberger run. Exceeding any of them yields
/// [`GroebnerError::CapExceeded`], never a wrong basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuchbergerCaps {
    /// Largest total degree allowed for a basis element.
    pub max_degree: u32,
    /// Largest number of S-pairs processed.
    pub max_pairs: usize,
    /// Largest number of basis elements before interreduction.
    pub max_basis: usize,
}

impl Default for BuchbergerCaps {
    fn default() -> Self {
        BuchbergerCaps {
            max_degree: 12,
            max_pairs: 20_000,
            max_basis: 2_000,
        }
    }
}

/// Basis elements with optional tags carried through every operation.
pub(crate) struct Tracked {
    pub polys: Vec<SPoly>,
    pub tags: Option<Vec<SPoly>>,
}

/// Buchberger's algorithm with the normal selection strategy and the
/// coprime-leading-monomial criterion, followed by full interreduction.
///
/// Tags, when present, transform alongside their polynomials, so a tag
/// records any linear functional of the cofactor expression.
pub(crate) fn buchberger_tracked(
    gens: Vec<SPoly>,
    tags: Option<Vec<SPoly>>,
    order: &MonomialOrder,
    caps: BuchbergerCaps,
) -> Result<Tracked, GroebnerError> {
    let mut polys: Vec<SPoly> = Vec::new();
    let mut ptags: Option<Vec<SPoly>> = tags.as_ref().map(|_| Vec::new());
    for (i, g) in gens.into_iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        if g.degree() > caps.max_degree {
            return Err(GroebnerError::CapExceeded("degree"));
        }
        polys.push(g);
        if let (Some(pt), Some(t)) = (ptags.as_mut(), tags.as_ref()) {
            pt.push(t[i].clone());
        }
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..polys.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let mut processed = 0usize;
    while !pairs.is_empty() {
        processed += 1;
        if processed > caps.max_pairs {
            return Err(GroebnerError::CapExceeded("pairs"));
        }
        // normal strategy: smallest lcm first, ties by index
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (ia, ja) = pairs[a];
                let (ib, jb) = pairs[b];
                let la = lcm(polys[ia].lm().unwrap(), polys[ja].lm().unwrap());
                let lb = lcm(polys[ib].lm().unwrap(), polys[jb].lm().unwrap());
                order.cmp(&la, &lb).then((ia, ja).cmp(&(ib, jb)))
            })
            .unwrap();
        let (i, j) = pairs.remove(best);
        let (mi, mj) = (polys[i].lm().unwrap().clone(), polys[j].lm().unwrap().clone());
        if coprime(&mi, &mj) {
            continue;
        }
        let l = lcm(&mi, &mj);
        let si = div_mono(&l, &mi);
        let sj = div_mono(&l, &mj);
        let ci = polys[i].lc().unwrap().recip();
        let cj = -polys[j].lc().unwrap().recip();
        let s = SPoly::zero()
            .add_scaled(&polys[i], &ci, &si, order)
            .add_scaled(&polys[j], &cj, &sj, order);
        let s_tag = ptags.as_ref().map(|t| {
            SPoly::zero()
                .add_scaled(&t[i], &ci, &si, order)
                .add_scaled(&t[j], &cj, &sj, order)
        });
        let (r, q_tag) = reduce(&s, &polys, ptags.as_deref(), order);
        if r.is_zero() {
            continue;
        }
        if r.degree() > caps.max_degree {
            return Err(GroebnerError::CapExceeded("degree"));
        }
        if polys.len() >= caps.max_basis {
            return Err(GroebnerError::CapExceeded("basis size"));
        }
        let new_index = polys.len();
        polys.push(r);
        if let Some(t) = ptags.as_mut() {
            let st = s_tag.unwrap();
            t.push(st.add_scaled(&q_tag, &-BigRational::one(), &vec![0; order.arity()], order));
        }
        for k in 0..new_index {
            pairs.push((k, new_index));
        }
    }

    Ok(interreduce(polys, ptags, order))
}

/// Minimalizes, fully reduces and normalizes a Gröbner basis. The output is
/// sorted by leading monomial, ascending.
fn interreduce(polys: Vec<SPoly>, tags: Option<Vec<SPoly>>, order: &MonomialOrder) -> Tracked {
    // drop elements whose leading monomial is divisible by another's
    let n = polys.len();
    let mut keep = vec![true; n];
    for i in 0..n {
        for j in 0..n {
            if i == j || !keep[j] {
                continue;
            }
            let (mi, mj) = (polys[i].lm().unwrap(), polys[j].lm().unwrap());
            if divides(mj, mi) && (mi != mj || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut basis: Vec<SPoly> = Vec::new();
    let mut btags: Option<Vec<SPoly>> = tags.as_ref().map(|_| Vec::new());
    for i in 0..n {
        if keep[i] {
            basis.push(polys[i].clone());
            if let (Some(bt), Some(t)) = (btags.as_mut(), tags.as_ref()) {
                bt.push(t[i].clone());
            }
        }
    }
    // reduce each element's tail by the others
    for i in 0..basis.len() {
        let others: Vec<SPoly> = basis
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, p)| p.clone())
            .collect();
        let other_tags: Option<Vec<SPoly>> = btags.as_ref().map(|t| {
            t.iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, p)| p.clone())
                .collect()
        });
        let head = SPoly {
            terms: vec![basis[i].terms[0].clone()],
        };
        let tail = SPoly {
            terms: basis[i].terms[1..].to_vec(),
        };
        let (r, q_tag) = reduce(&tail, &others, other_tags.as_deref(), order);
        basis[i] = head.add(&r, order);
        if let Some(t) = btags.as_mut() {
            t[i] = t[i].add_scaled(&q_tag, &-BigRational::one(), &vec![0; order.arity()], order);
        }
    }
    // monic, then sorted
    let mut items: Vec<(SPoly, Option<SPoly>)> = basis
        .into_iter()
        .enumerate()
        .map(|(i, p)| {
            let (m, inv) = p.make_monic();
            let tag = btags.as_ref().map(|t| t[i].scale(&inv));
            (m, tag)
        })
        .collect();
    items.sort_by(|a, b| order.cmp(a.0.lm().unwrap(), b.0.lm().unwrap()));
    let has_tags = btags.is_some();
    let (polys, tags): (Vec<SPoly>, Vec<Option<SPoly>>) = items.into_iter().unzip();
    Tracked {
        polys,
        tags: has_tags.then(|| tags.into_iter().map(|t| t.unwrap()).collect()),
    }
}
