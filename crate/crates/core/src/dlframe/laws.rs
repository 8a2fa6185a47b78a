//! The individual law checks. Each returns the first violating tuple in
//! canonical scan order, or `None`.

use rayon::prelude::*;

use super::{Analysis, FieldContext};
use crate::lattice::{AdjointError, Elem, JoinFailure, MonotoneMap};
use crate::quantale::Axiom;

pub(super) type Witness = Option<Vec<Elem>>;

fn first_pair(xs: &[Elem], bad: impl Fn(Elem, Elem) -> bool + Sync) -> Witness {
    xs.par_iter()
        .find_map_first(|&x| xs.iter().copied().find(|&y| bad(x, y)).map(|y| vec![x, y]))
}

fn first_triple(xs: &[Elem], bad: impl Fn(Elem, Elem, Elem) -> bool + Sync) -> Witness {
    xs.par_iter().find_map_first(|&x| {
        for &y in xs {
            for &z in xs {
                if bad(x, y, z) {
                    return Some(vec![x, y, z]);
                }
            }
        }
        None
    })
}

fn first(xs: impl IntoIterator<Item = Elem>, bad: impl Fn(Elem) -> bool) -> Witness {
    xs.into_iter().find(|&x| bad(x)).map(|x| vec![x])
}

fn all(an: &Analysis<'_>) -> Vec<Elem> {
    an.lattice().elements().collect()
}

fn adjoint_witness(err: AdjointError, source: &[Elem]) -> Vec<Elem> {
    match err {
        AdjointError::NotJoinPreserving(JoinFailure::Bottom { .. }) => vec![source[0]],
        AdjointError::NotJoinPreserving(JoinFailure::Pair { x, y }) => vec![source[x], source[y]],
        AdjointError::AdjunctionBroken { x, .. } => vec![source[x]],
    }
}

// quantale tier

pub(super) fn ax_quantale(an: &Analysis<'_>) -> Witness {
    an.axioms()
        .entries
        .iter()
        .find(|e| !e.passed && !matches!(e.axiom, Axiom::Field(_)))
        .map(|e| e.witness.clone().unwrap_or_default())
}

pub(super) fn ax_bousfield(an: &Analysis<'_>) -> Witness {
    an.bousfield().witness.map(|x| vec![x])
}

pub(super) fn a_annihilator(an: &Analysis<'_>) -> Witness {
    let l = an.lattice();
    let bottom = l.bottom();
    first_pair(&all(an), |x, y| l.leq(y, an.a(x)) != (an.s(x, y) == bottom))
}

pub(super) fn a_antitone(an: &Analysis<'_>) -> Witness {
    let l = an.lattice();
    first_pair(&all(an), |x, y| l.leq(x, y) && !l.leq(an.a(y), an.a(x)))
}

pub(super) fn a_cube(an: &Analysis<'_>) -> Witness {
    let l = an.lattice();
    first(l.elements(), |x| {
        let a2 = an.a(an.a(x));
        an.a(a2) != an.a(x) || !l.leq(x, a2)
    })
}

pub(super) fn power_decreasing(an: &Analysis<'_>) -> Witness {
    let l = an.lattice();
    let q = an.model();
    first(l.elements(), |x| {
        let mut power = x;
        for _ in 0..=l.len() {
            let next = an.s(x, power);
            if !l.leq(next, power) {
                return true;
            }
            power = next;
        }
        q.stabilization_index(x).is_err()
    })
}

pub(super) fn sq_stab(an: &Analysis<'_>) -> Witness {
    first(an.lattice().elements(), |x| {
        let sq = an.s(x, x);
        an.s(x, sq) != sq
    })
}

pub(super) fn dl_frame(an: &Analysis<'_>) -> Witness {
    super::dl_frame_violation(an.model(), an.dl())
}

pub(super) fn r_retraction(an: &Analysis<'_>) -> Witness {
    let l = an.lattice();
    let bad = first(l.elements(), |x| {
        let rx = an.r(x);
        !l.leq(rx, x) || !an.in_dl(rx) || an.r(rx) != rx || (an.in_dl(x) && rx != x)
    });
    if bad.is_some() {
        return bad;
    }
    // second route: r as the right adjoint of the inclusion DL → L
    let dl = an.dl();
    let inclusion = match MonotoneMap::new(an.dl_lattice(), l, dl.to_vec()) {
        Ok(f) => f,
        Err(_) => return Some(dl.to_vec()),
    };
    match inclusion.right_adjoint() {
        Ok(g) => first(l.elements(), |x| dl[g.apply(x)] != an.r(x)),
        Err(e) => Some(adjoint_witness(e, dl)),
    }
}

pub(super) fn r_meets(an: &Analysis<'_>) -> Witness {
    let l = an.lattice();
    if an.r(l.top()) != l.top() {
        return Some(vec![l.top()]);
    }
    first_pair(&all(an), |x, y| an.r(l.meet(x, y)) != an.dl_glb(an.r(x), an.r(y)))
}

pub(super) fn r_smash(an: &Analysis<'_>) -> Witness {
    first_pair(&all(an), |x, y| an.r(an.s(x, y)) != an.s(an.r(x), an.r(y)))
}

pub(super) fn ba_split(an: &Analysis<'_>) -> Witness {
    let l = an.lattice();
    an.ba().iter().find_map(|&x| {
        l.elements()
            .find(|&e| e != l.join(an.s(e, x), an.s(e, an.a(x))))
            .map(|e| vec![x, e])
    })
}

pub(super) fn ba_order(an: &Analysis<'_>) -> Witness {
    let l = an.lattice();
    an.ba().iter().find_map(|&x| {
        l.elements()
            .find(|&e| l.leq(e, x) != (e == an.s(e, x)))
            .map(|e| vec![x, e])
    })
}

pub(super) fn ba_meet(an: &Analysis<'_>) -> Witness {
    let l = an.lattice();
    first_pair(an.ba(), |x, y| l.meet(x, y) != an.s(x, y))
}

pub(super) fn ba_in_dl(an: &Analysis<'_>) -> Witness {
    first(an.ba().iter().copied(), |x| !an.in_dl(x))
}

pub(super) fn ba_closure(an: &Analysis<'_>) -> Witness {
    let l = an.lattice();
    let bad = first(an.ba().iter().copied(), |x| !an.in_ba(an.a(x)));
    if bad.is_some() {
        return bad;
    }
    first_pair(an.ba(), |x, y| {
        let xy = an.s(x, y);
        let j = l.join(x, y);
        !an.in_ba(xy) || !an.in_ba(j) || an.a(xy) != l.join(an.a(x), an.a(y)) || an.a(j) != an.s(an.a(x), an.a(y))
    })
}

pub(super) fn ba_boolean(an: &Analysis<'_>) -> Witness {
    let l = an.lattice();
    let bad = first([l.bottom(), l.top()], |x| !an.in_ba(x)).or_else(|| {
        first(an.ba().iter().copied(), |x| {
            l.join(x, an.a(x)) != l.top() || l.meet(x, an.a(x)) != l.bottom()
        })
    });
    if bad.is_some() {
        return bad;
    }
    first_triple(an.ba(), |x, y, z| {
        l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), l.join(x, z))
    })
}

pub(super) fn ba_meet_complemented(an: &Analysis<'_>) -> Witness {
    let l = an.lattice();
    let (bottom, top) = (l.bottom(), l.top());
    first(l.elements(), |x| {
        let has = l.elements().any(|y| l.meet(x, y) == bottom && l.join(x, y) == top);
        if has != an.in_ba(x) {
            return true;
        }
        an.in_ba(x) && l.meet(x, an.a(x)) != bottom
    })
}

pub(super) fn ba_in_cba(an: &Analysis<'_>) -> Witness {
    first(an.ba().iter().copied(), |x| !an.is_closed(x))
}

pub(super) fn acomp_laws(an: &Analysis<'_>) -> Witness {
    let l = an.lattice();
    let dl = an.dl();
    let bottom = l.bottom();
    if an.big_a(bottom) != l.top() {
        return Some(vec![bottom]);
    }
    let bad = first(dl.iter().copied(), |x| {
        let ax = an.big_a(x);
        !an.in_dl(ax) || !l.leq(x, an.big_a2(x)) || an.big_a(an.big_a2(x)) != ax
    });
    if bad.is_some() {
        return bad;
    }
    first_pair(dl, |x, y| {
        (l.leq(y, an.big_a(x)) != (an.s(y, x) == bottom))
            || (l.leq(x, y) && !l.leq(an.big_a(y), an.big_a(x)))
            || an.big_a(l.join(x, y)) != an.dl_glb(an.big_a(x), an.big_a(y))
    })
}

pub(super) fn acomp_meets(an: &Analysis<'_>) -> Witness {
    let l = an.lattice();
    first_pair(an.dl(), |x, y| {
        let m = an.dl_glb(x, y);
        let am = an.big_a(m);
        am != an.big_a(an.dl_glb(an.big_a2(x), an.big_a2(y)))
            || am != an.big_a2(l.join(an.big_a(x), an.big_a(y)))
            || an.big_a2(m) != an.dl_glb(an.big_a2(x), an.big_a2(y))
    })
}

pub(super) fn cba_boolean(an: &Analysis<'_>) -> Witness {
    let l = an.lattice();
    let closed = an.closed();
    let (bottom, top) = (l.bottom(), l.top());
    let bad = first([bottom, top], |x| !an.is_closed(x)).or_else(|| {
        first(closed.iter().copied(), |x| {
            let c = an.big_a(x);
            !an.is_closed(c) || an.dl_glb(x, c) != bottom || an.big_a2(l.join(x, c)) != top
        })
    });
    if bad.is_some() {
        return bad;
    }
    let cjoin = |x: Elem, y: Elem| an.big_a2(l.join(x, y));
    let bad = first_pair(closed, |x, y| {
        let j = cjoin(x, y);
        !an.is_closed(an.dl_glb(x, y))
            || !an.is_closed(j)
            || closed.iter().any(|&z| l.leq(x, z) && l.leq(y, z) && !l.leq(j, z))
    });
    if bad.is_some() {
        return bad;
    }
    first_triple(closed, |x, y, z| {
        an.dl_glb(x, cjoin(y, z)) != cjoin(an.dl_glb(x, y), an.dl_glb(x, z))
    })
}

pub(super) fn cba_adjoint(an: &Analysis<'_>) -> Witness {
    let l = an.lattice();
    let dl = an.dl();
    let closed = an.closed();
    let bad = dl.iter().find_map(|&x| {
        closed
            .iter()
            .find(|&&c| l.leq(an.big_a2(x), c) != l.leq(x, c))
            .map(|&c| vec![x, c])
    });
    if bad.is_some() {
        return bad;
    }
    // second route: the right adjoint of A² : DL → cBA is the inclusion
    let cba = an.cba();
    let table: Vec<Elem> = dl
        .iter()
        .map(|&x| cba.position(an.big_a2(x)).expect("A² lands in cBA"))
        .collect();
    let f = match MonotoneMap::new(an.dl_lattice(), &cba.lattice, table) {
        Ok(f) => f,
        Err(_) => return Some(dl.to_vec()),
    };
    match f.right_adjoint() {
        Ok(g) => first(0..closed.len(), |i| dl[g.apply(i)] != closed[i]).map(|w| vec![closed[w[0]]]),
        Err(e) => Some(adjoint_witness(e, dl)),
    }
}

pub(super) fn glivenko(an: &Analysis<'_>) -> Witness {
    first_pair(an.dl(), |x, y| !an.glivenko(x, y).holds())
}

// Bousfield tier

pub(super) fn a_reflects_order(an: &Analysis<'_>) -> Witness {
    let l = an.lattice();
    first_pair(&all(an), |x, y| l.leq(an.a(y), an.a(x)) && !l.leq(x, y))
}

pub(super) fn a_meet_formula(an: &Analysis<'_>) -> Witness {
    let q = an.model();
    first_pair(&all(an), |x, y| !q.curly_meet_identity(x, y).agree)
}

pub(super) fn a_converts(an: &Analysis<'_>) -> Witness {
    let l = an.lattice();
    first_pair(&all(an), |x, y| {
        an.a(l.join(x, y)) != l.meet(an.a(x), an.a(y)) || an.a(l.meet(x, y)) != l.join(an.a(x), an.a(y))
    })
}

pub(super) fn curly_vee_bound(an: &Analysis<'_>) -> Witness {
    let l = an.lattice();
    let q = an.model();
    first_pair(&all(an), |x, y| !l.leq(l.join(x, y), q.curly_vee(x, y)))
}

// field tier

pub(super) fn strange_ideal(an: &Analysis<'_>, ctx: &FieldContext) -> Witness {
    let l = an.lattice();
    let h = ctx.strange.h;
    let bottom = l.bottom();
    let in_ideal = |x: Elem| l.leq(x, ctx.strange.a_d);
    let bad = first(l.elements(), |x| {
        in_ideal(x) != (l.lt(x, h) && an.s(x, h) == bottom) || (l.lt(x, h) && an.r(x) != bottom)
    });
    if bad.is_some() {
        return bad;
    }
    let below: Vec<Elem> = l.down_set(h).ones().collect();
    first_pair(&below, |x, y| x != h && an.s(x, y) != bottom)
}

pub(super) fn quotient_laws(an: &Analysis<'_>, ctx: &FieldContext) -> Witness {
    let quot = &an.conj_r(ctx).quotient;
    let l = an.lattice();
    let m = quot.m;
    if let Some(failure) = quot.projection_map().join_failure() {
        return Some(match failure {
            JoinFailure::Bottom { .. } => vec![l.bottom()],
            JoinFailure::Pair { x, y } => vec![x, y],
        });
    }
    let kernel = quot.kernel();
    let bad = first(l.elements(), |x| {
        kernel.contains(&x) != l.leq(x, m)
            || quot.classes[quot.classes[x]] != quot.classes[x]
            || (l.leq(m, x) != quot.representatives.contains(&x))
    });
    if bad.is_some() {
        return bad;
    }
    // the congruence is compatible with joins
    first_pair(&all(an), |x, z| {
        quot.classes[l.join(quot.classes[x], z)] != quot.classes[l.join(x, z)]
    })
}

pub(super) fn dense_above_d(an: &Analysis<'_>, ctx: &FieldContext) -> Witness {
    let l = an.lattice();
    first(an.dl().iter().copied(), |z| l.leq(ctx.strange.d, z) && !an.is_dense(z))
}

pub(super) fn conj_r_welldef(an: &Analysis<'_>, ctx: &FieldContext) -> Witness {
    an.conj_r(ctx).well_defined.clone()
}

pub(super) fn conj_r_kernel(an: &Analysis<'_>, ctx: &FieldContext) -> Witness {
    an.conj_r(ctx).kernel.clone()
}

pub(super) fn conj_r_iso(an: &Analysis<'_>, ctx: &FieldContext) -> Witness {
    an.conj_r(ctx).iso.clone()
}

pub(super) fn conj_r(an: &Analysis<'_>, ctx: &FieldContext) -> Witness {
    let c = an.conj_r(ctx);
    c.well_defined
        .clone()
        .or_else(|| c.kernel.clone())
        .or_else(|| c.iso.clone())
}

// conditional on conj-r

pub(super) fn desc_r_strange(an: &Analysis<'_>, ctx: &FieldContext) -> Witness {
    let l = an.lattice();
    let h = ctx.strange.h;
    first(l.elements(), |x| (an.r(x) == l.bottom()) != l.lt(x, h))
}

pub(super) fn desc_r_joins(an: &Analysis<'_>, _: &FieldContext) -> Witness {
    let l = an.lattice();
    first_pair(&all(an), |x, y| an.r(l.join(x, y)) != l.join(an.r(x), an.r(y)))
}

pub(super) fn desc_r_field_dl(an: &Analysis<'_>, ctx: &FieldContext) -> Witness {
    let l = an.lattice();
    let h = ctx.strange.h;
    first(l.elements(), |x| an.s(x, h) != l.bottom() && !an.in_dl(x))
}

pub(super) fn desc_r_square(an: &Analysis<'_>, _: &FieldContext) -> Witness {
    first(an.lattice().elements(), |x| an.r(x) != an.s(x, x))
}

pub(super) fn desc_r_stab(an: &Analysis<'_>, _: &FieldContext) -> Witness {
    sq_stab(an)
}

pub(super) fn meet_smash(an: &Analysis<'_>, ctx: &FieldContext) -> Witness {
    let l = an.lattice();
    let m = ctx.strange.a_d;
    first_pair(&all(an), |x, y| l.join(l.meet(x, y), m) != l.join(an.s(x, y), m))
}

pub(super) fn dense_char(an: &Analysis<'_>, ctx: &FieldContext) -> Witness {
    let l = an.lattice();
    let d = ctx.strange.d;
    // dense already requires membership in DL
    first(l.elements(), |z| an.is_dense(z) != l.leq(d, z))
}

pub(super) fn a2_criterion(an: &Analysis<'_>, ctx: &FieldContext) -> Witness {
    let d = ctx.strange.d;
    first_pair(an.dl(), |x, y| {
        (an.big_a2(x) == an.big_a2(y)) != (an.s(x, d) == an.s(y, d))
    })
}

pub(super) fn ld_in_dl(an: &Analysis<'_>, ctx: &FieldContext) -> Witness {
    let ld = super::ld_elements(an.model(), ctx.strange.d);
    first(ld, |w| !an.in_dl(w))
}

/// `F(x ∧ D) = A²x` over `x ∈ DL` is a well-defined order-isomorphism from
/// `L_D` onto `cBA`.
pub(super) fn ld_iso(an: &Analysis<'_>, ctx: &FieldContext) -> Witness {
    let l = an.lattice();
    let d = ctx.strange.d;
    let ld = super::ld_elements(an.model(), d);
    let mut f: Vec<Option<(Elem, Elem)>> = vec![None; l.len()];
    for &x in an.dl() {
        let w = an.s(x, d);
        let image = an.big_a2(x);
        match f[w] {
            Some((x0, img)) if img != image => return Some(vec![x0, x]),
            Some(_) => {}
            None => f[w] = Some((x, image)),
        }
    }
    // every element of L_D is reached from DL
    if let Some(&w) = ld.iter().find(|&&w| f[w].is_none()) {
        return Some(vec![w]);
    }
    let image = |w: Elem| f[w].expect("checked above").1;
    let closed = an.closed();
    if let Some(&c) = closed.iter().find(|&&c| !ld.iter().any(|&w| image(w) == c)) {
        return Some(vec![c]);
    }
    first_pair(&ld, |v, w| l.leq(v, w) != l.leq(image(v), image(w)))
}
