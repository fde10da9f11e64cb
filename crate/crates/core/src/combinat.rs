//! Small enumerators shared by the Stirling definitions and the expansions.
//! All of them visit their objects in ascending lexicographic order.

/// Visits every sequence of `parts` integers, each `>= min_part`, summing to
/// `total`.
pub fn for_each_composition(total: usize, parts: usize, min_part: usize, f: &mut impl FnMut(&[usize])) {
    fn go(left: usize, parts: usize, min_part: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if parts == 0 {
            if left == 0 {
                f(cur);
            }
            return;
        }
        let reserve = min_part * (parts - 1);
        if left < reserve + min_part {
            return;
        }
        for first in min_part..=left - reserve {
            cur.push(first);
            go(left - first, parts - 1, min_part, cur, f);
            cur.pop();
        }
    }
    go(total, parts, min_part, &mut Vec::with_capacity(parts), f);
}

/// Visits every strictly increasing sequence of length `len` drawn from
/// `0..bound`.
pub fn for_each_strict_chain(len: usize, bound: usize, f: &mut impl FnMut(&[usize])) {
    fn go(start: usize, len: usize, bound: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == len {
            f(cur);
            return;
        }
        let need = len - cur.len();
        if bound < need {
            return;
        }
        for v in start..=bound - need {
            cur.push(v);
            go(v + 1, len, bound, cur, f);
            cur.pop();
        }
    }
    go(0, len, bound, &mut Vec::with_capacity(len), f);
}

/// Visits every weakly increasing sequence of length `len` with entries in
/// `0..=max`.
pub fn for_each_weak_chain(len: usize, max: usize, f: &mut impl FnMut(&[usize])) {
    fn go(start: usize, len: usize, max: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == len {
            f(cur);
            return;
        }
        for v in start..=max {
            cur.push(v);
            go(v, len, max, cur, f);
            cur.pop();
        }
    }
    go(0, len, max, &mut Vec::with_capacity(len), f);
}
