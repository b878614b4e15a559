use std::cmp::Ordering;
use std::fmt;

use super::{LabeledPoly, ModuleMonomial};
use crate::poly::{Monomial, PolyRing};
use crate::ring::Ring;
use crate::weak::format_indices;

/// `S_J` together with `M(J)` and the indices attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presignature {
    pub lcm: Monomial,
    pub presig: ModuleMonomial,
    pub attaining: Vec<usize>,
}

/// A regular saturated set with its signature index `τ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularSaturatedSet {
    pub indices: Vec<usize>,
    pub lcm: Monomial,
    pub presig: ModuleMonomial,
    pub sig_index: usize,
}

impl fmt::Display for RegularSaturatedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_indices(&self.indices, Some(self.sig_index)))
    }
}

fn shifted<E>(g: &LabeledPoly<E>, lcm: &Monomial) -> ModuleMonomial
where
    E: Clone,
{
    let m = lcm.checked_div(g.value.lm().unwrap()).expect("M(j) | M(J)");
    g.sig.module_monomial().shifted(&m)
}

/// `S_J = max_{j∈J} (M(J)/M(j))·𝔰(α_j)`, coefficient-free.
pub fn presignature<R: Ring>(
    ctx: &PolyRing<R>,
    indices: &[usize],
    basis: &[LabeledPoly<R::Elem>],
) -> Presignature {
    let lcm = indices
        .iter()
        .fold(ctx.one_mono(), |acc, &j| acc.lcm(basis[j].value.lm().unwrap()));
    let mut best: Option<ModuleMonomial> = None;
    let mut attaining = Vec::new();
    for &j in indices {
        let s = shifted(&basis[j], &lcm);
        match best.as_ref().map(|b| s.cmp(b, ctx.order())) {
            None | Some(Ordering::Greater) => {
                best = Some(s);
                attaining = vec![j];
            }
            Some(Ordering::Equal) => attaining.push(j),
            Some(Ordering::Less) => {}
        }
    }
    Presignature { lcm, presig: best.expect("nonempty index set"), attaining }
}

/// The regular saturated sets with lcm `M = M(indices)` inside the
/// saturated set `indices`. For each `a` the candidate is `a` together with
/// every index whose shifted signature is strictly below that of `a`; it is
/// kept when its lcm is still `M` and it has at least two elements. Sets
/// whose lcm drops below `M` belong to the saturated set of that smaller lcm.
pub fn regularize<R: Ring>(
    ctx: &PolyRing<R>,
    indices: &[usize],
    basis: &[LabeledPoly<R::Elem>],
) -> Vec<RegularSaturatedSet> {
    let lcm = indices
        .iter()
        .fold(ctx.one_mono(), |acc, &j| acc.lcm(basis[j].value.lm().unwrap()));
    let shifts: Vec<ModuleMonomial> = indices.iter().map(|&j| shifted(&basis[j], &lcm)).collect();
    let mut out: Vec<RegularSaturatedSet> = Vec::new();
    for (ai, &a) in indices.iter().enumerate() {
        let members: Vec<usize> = indices
            .iter()
            .zip(&shifts)
            .filter(|(j, s)| **j == a || s.cmp(&shifts[ai], ctx.order()) == Ordering::Less)
            .map(|(j, _)| *j)
            .collect();
        if members.len() < 2 {
            continue;
        }
        let sub_lcm = members
            .iter()
            .fold(ctx.one_mono(), |acc, &j| acc.lcm(basis[j].value.lm().unwrap()));
        if sub_lcm != lcm {
            continue;
        }
        out.push(RegularSaturatedSet { indices: members, lcm: lcm.clone(), presig: shifts[ai].clone(), sig_index: a });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonomialOrder;
    use crate::ring::Integers;
    use crate::sig::tests::sig;
    use num_bigint::BigInt;

    fn ctx() -> PolyRing<Integers> {
        PolyRing::new(Integers, ["x", "y"], MonomialOrder::Lex)
    }

    /// g1..g7 of the worked example over ℤ[x, y].
    fn basis(r: &PolyRing<Integers>) -> Vec<LabeledPoly<BigInt>> {
        [
            ("3*x*y + x + y^2", 1, "1", 1),
            ("x^2", 1, "1", 2),
            ("-x*y^2", 3, "y", 2),
            ("x*y + y^3", 9, "y", 2),
            ("-x + 3*y^3 - y^2", 27, "y", 2),
            ("3*y^4", 27, "y^2", 2),
            ("y^4", 9, "y^2", 2),
        ]
        .iter()
        .map(|&(v, k, m, i)| LabeledPoly { value: r.parse(v).unwrap(), sig: sig(r, k, m, i) })
        .collect()
    }

    #[test]
    fn presignatures() {
        let r = ctx();
        let g = basis(&r);
        let p = presignature(&r, &[0, 1], &g);
        assert_eq!(crate::sig::format_module_monomial(&r, &p.presig), "ye2");
        assert_eq!(p.attaining, vec![1]);
        let p = presignature(&r, &[2], &g);
        assert_eq!(p.attaining, vec![2]);
        assert_eq!(presignature(&r, &[5, 6], &g).attaining, vec![5, 6]);
    }

    #[test]
    fn collisions_split() {
        let r = ctx();
        let g = basis(&r);
        let sets = regularize(&r, &[0, 2, 3, 4, 5, 6], &g);
        let shown: Vec<String> = sets.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["{1,3,4,5,6*}", "{1,3,4,5,7*}"]);
        assert!(regularize(&r, &[5, 6], &g).is_empty());
        let sets = regularize(&r, &[0, 1], &g);
        assert_eq!(sets.len(), 1);
        assert_eq!(sets[0].to_string(), "{1,2*}");
    }

    #[test]
    fn non_maximal_signature_index() {
        // Sat(xy) = {1,2,3} with shifted signatures x·e1 < 1·e2 < y·e2. Besides
        // the full set, {1,3} with lcm xy is regular saturated with index 3.
        let r = ctx();
        let g = vec![
            LabeledPoly { value: r.parse("y").unwrap(), sig: sig(&r, 1, "1", 1) },
            LabeledPoly { value: r.parse("x").unwrap(), sig: sig(&r, 1, "1", 2) },
            LabeledPoly { value: r.parse("x*y").unwrap(), sig: sig(&r, 1, "1", 2) },
        ];
        let shown: Vec<String> = regularize(&r, &[0, 1, 2], &g).iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["{1,2*,3}", "{1,3*}"]);
    }
}
