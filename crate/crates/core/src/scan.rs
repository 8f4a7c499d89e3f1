//! Exhaustive tuple scans with deterministic first-witness selection.

use rayon::prelude::*;

use crate::group::Elem;

/// Lexicographically least tuple in `dims[0] × … × dims[k-1]` where `holds` is false.
///
/// The leading coordinate is split across threads; `find_map_first` keeps the
/// answer independent of scheduling.
pub fn first_failure(dims: &[usize], holds: impl Fn(&[Elem]) -> bool + Sync) -> Option<Vec<Elem>> {
    if dims.is_empty() {
        return if holds(&[]) { None } else { Some(Vec::new()) };
    }
    if dims.iter().any(|&d| d == 0) {
        return None;
    }
    let k = dims.len();
    (0..dims[0]).into_par_iter().find_map_first(|first| {
        let mut t = vec![0usize; k];
        t[0] = first;
        loop {
            if !holds(&t) {
                return Some(t);
            }
            let mut pos = k;
            loop {
                if pos == 1 {
                    return None;
                }
                pos -= 1;
                t[pos] += 1;
                if t[pos] < dims[pos] {
                    break;
                }
                t[pos] = 0;
            }
        }
    })
}

/// Number of tuples in the box.
pub fn volume(dims: &[usize]) -> u64 {
    dims.iter().map(|&d| d as u64).product()
}

/// Scans a list of candidates in order, in parallel, returning the first failing index.
pub fn first_failing_index(len: usize, holds: impl Fn(usize) -> bool + Sync) -> Option<usize> {
    (0..len).into_par_iter().find_first(|&i| !holds(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn picks_lexicographically_least() {
        let hit = first_failure(&[4, 4, 4], |t| !(t[0] + t[1] + t[2] >= 5 && t[2] % 2 == 1));
        assert_eq!(hit, Some(vec![0, 2, 3]));
    }

    #[test]
    fn empty_box_passes() {
        assert_eq!(first_failure(&[3, 0], |_| false), None);
        assert_eq!(volume(&[3, 0]), 0);
    }

    #[test]
    fn single_coordinate() {
        assert_eq!(first_failure(&[5], |t| t[0] != 3), Some(vec![3]));
        assert_eq!(first_failing_index(5, |i| i < 2), Some(2));
    }
}
