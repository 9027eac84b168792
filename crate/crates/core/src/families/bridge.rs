//! Symbols written between consecutive codewords.
//!
//! `None` in a bridge is the no-write symbol `z`. For the GF(4) families the
//! result is in GF(4); the TDMR layer picks the GF(8) column.
//!
//! OP-LOCO and NP-LOCO use a base rule list extended by its mirror
//! image: a pattern is centred on the right side of the boundary as often as
//! on the left, and the extra clauses cover exactly those boundaries where
//! the one-sided list would write a forbidden pattern.
//!
//! For OS-, OP- and NS-LOCO a bridge never repeats the first symbol of the
//! next codeword. The base lists do in some cases, which lets a
//! constant codeword pick up a bridge on both sides and run for `m + 2`
//! columns; such a bridge is replaced by the first safe level in a fixed
//! preference order. A column run then includes at most one bridge.

use super::{Family, OP_B1, OP_B2};

/// `prev_tail` holds the last (up to two) symbols of the previous codeword,
/// leftmost first; `next_head` the first (up to two) of the next one.
pub fn bridge(family: Family, prev_tail: &[u8], next_head: &[u8]) -> Vec<Option<u8>> {
    let p0 = prev_tail.last().copied();
    let p1 = prev_tail.len().checked_sub(2).map(|k| prev_tail[k]);
    let n0 = next_head.first().copied();
    let n1 = next_head.get(1).copied();
    match family {
        Family::LoRll { d } => vec![Some(0); d as usize],
        Family::SLoco { x } => vec![None; x as usize],
        Family::Os => {
            let b = if p0 == Some(3) && n0 == Some(3) { 4 } else { 3 };
            vec![clocked(
                family,
                prev_tail,
                Some(b),
                next_head,
                &[3, 4, 1, 6],
            )]
        }
        Family::Op => {
            let b = op_bridge(p1, p0, n0, n1);
            vec![clocked(
                family,
                prev_tail,
                b,
                next_head,
                &[3, 4, 0, 1, 6, 7],
            )]
        }
        Family::Ns => {
            let b = if p0 == Some(1) && n0 == Some(1) { 2 } else { 1 };
            vec![clocked(
                family,
                prev_tail,
                Some(b),
                next_head,
                &[1, 2, 0, 3],
            )]
        }
        Family::Np => vec![np_bridge(p1, p0, n0, n1)],
    }
}

/// Keeps `b` unless it equals the next codeword's first symbol; otherwise the
/// first candidate that differs from it and writes no forbidden pattern, or
/// `z` if none does.
fn clocked(
    family: Family,
    prev_tail: &[u8],
    b: Option<u8>,
    next_head: &[u8],
    candidates: &[u8],
) -> Option<u8> {
    let n0 = next_head.first().copied();
    if b.is_none() || b != n0 {
        return b;
    }
    let set = family.forbidden_set();
    candidates.iter().copied().find(|&c| {
        let window: Vec<u8> = prev_tail
            .iter()
            .chain([&c])
            .chain(next_head)
            .copied()
            .collect();
        Some(c) != n0 && set.admits(&window)
    })
}

fn is(c: Option<u8>, v: u8) -> bool {
    c == Some(v)
}

fn in_set(c: Option<u8>, set: &[u8]) -> bool {
    c.is_some_and(|c| set.contains(&c))
}

/// `z`, `α^3` (level 4) or `α^2` (level 3).
fn op_bridge(p1: Option<u8>, p0: Option<u8>, n0: Option<u8>, n1: Option<u8>) -> Option<u8> {
    let (b1, b2) = (&OP_B1[..], &OP_B2[..]);
    // β1 α | α^4 β2, and its mirror β2 α^4 | α β1.
    if (in_set(p1, b1) && is(p0, 2) && is(n0, 5) && in_set(n1, b2))
        || (in_set(p1, b2) && is(p0, 5) && is(n0, 2) && in_set(n1, b1))
    {
        return None;
    }
    let alpha3 = (in_set(p1, b2) && is(p0, 2) && is(n0, 5) && in_set(n1, b2))
        || (in_set(p1, b2) && is(p0, 5) && is(n0, 2) && in_set(n1, b2))
        || (is(p0, 5) && !is(n0, 2))
        || (!is(p0, 2) && is(n0, 5) && in_set(n1, b2))
        || (is(p0, 3) && is(n0, 3));
    Some(if alpha3 { 4 } else { 3 })
}

/// `z`, `1` (level 1) or `α` (level 2).
fn np_bridge(p1: Option<u8>, p0: Option<u8>, n0: Option<u8>, n1: Option<u8>) -> Option<u8> {
    let (b1, b2) = (&[0u8, 1][..], &[2u8, 3][..]);
    // β1 α^2 | 0 β2, and its mirror β2 0 | α^2 β1.
    if (in_set(p1, b1) && is(p0, 3) && is(n0, 0) && in_set(n1, b2))
        || (in_set(p1, b2) && is(p0, 0) && is(n0, 3) && in_set(n1, b1))
    {
        return None;
    }
    let one = (in_set(p1, b2) && is(p0, 3) && is(n0, 0) && in_set(n1, b2))
        || (in_set(p1, b2) && is(p0, 0) && is(n0, 3) && in_set(n1, b2))
        || (is(p0, 0) && !is(n0, 3))
        || (!is(p0, 3) && is(n0, 0) && in_set(n1, b2))
        || (is(p0, 2) && is(n0, 2));
    Some(if one { 1 } else { 2 })
}

/// `prev ‖ bridge ‖ next` has no forbidden pattern. A `z` separates the two
/// sides completely.
pub fn boundary_is_safe(family: Family, prev_tail: &[u8], next_head: &[u8]) -> bool {
    let set = family.forbidden_set();
    let mut segment: Vec<u8> = prev_tail.to_vec();
    for sym in bridge(family, prev_tail, next_head) {
        match sym {
            Some(l) => segment.push(l),
            None => {
                if !set.admits(&segment) {
                    return false;
                }
                segment.clear();
            }
        }
    }
    segment.extend_from_slice(next_head);
    set.admits(&segment)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_cases() {
        assert_eq!(bridge(Family::Os, &[1, 3], &[3, 0]), vec![Some(4)]);
        assert_eq!(bridge(Family::Os, &[1, 3], &[2, 0]), vec![Some(3)]);
        assert_eq!(bridge(Family::Op, &[0, 2], &[5, 6]), vec![None]);
        assert_eq!(bridge(Family::Op, &[6, 2], &[5, 6]), vec![Some(4)]);
        assert_eq!(bridge(Family::Op, &[0, 5], &[0, 0]), vec![Some(4)]);
        assert_eq!(
            bridge(Family::LoRll { d: 2 }, &[0, 1], &[1, 0]),
            vec![Some(0); 2]
        );
        assert_eq!(bridge(Family::SLoco { x: 3 }, &[1], &[1]), vec![None; 3]);
        assert_eq!(bridge(Family::Ns, &[0, 1], &[1, 0]), vec![Some(2)]);
        assert_eq!(bridge(Family::Np, &[0, 3], &[0, 2]), vec![None]);
    }

    #[test]
    fn mirrored_cases() {
        // Without the mirror clauses these would write α^2 α^4 β2 and α 0 α.
        assert_eq!(bridge(Family::Op, &[0, 0], &[5, 2]), vec![Some(4)]);
        assert_eq!(bridge(Family::Op, &[2, 5], &[2, 0]), vec![None]);
        assert_eq!(bridge(Family::Np, &[0, 1], &[0, 2]), vec![Some(1)]);
        assert!(boundary_is_safe(Family::Op, &[0, 0], &[5, 2]));
    }

    #[test]
    fn clocking_cases() {
        // α^2 α^2 α^2 would otherwise get α^2 bridges on both sides.
        assert_eq!(bridge(Family::Os, &[0, 0], &[3, 3]), vec![Some(4)]);
        assert_eq!(bridge(Family::Os, &[3, 3], &[0, 0]), vec![Some(3)]);
        assert_eq!(bridge(Family::Op, &[0, 0], &[3, 3]), vec![Some(4)]);
        assert_eq!(bridge(Family::Ns, &[0, 0], &[1, 1]), vec![Some(2)]);
        assert_eq!(bridge(Family::Ns, &[0, 1], &[]), vec![Some(1)]);
    }
}
