use num_traits::Zero;

use super::{ExactInt, SquareMatrix};

/// Fraction-free (Bareiss) row reduction. Every intermediate entry is a minor
/// of the input, so each division below is exact.
pub(super) fn bareiss_rank(m: &SquareMatrix) -> usize {
    let n = m.order();
    let mut a: Vec<Vec<ExactInt>> = m.rows().map(<[ExactInt]>::to_vec).collect();
    let mut prev = ExactInt::from(1);
    let mut rank = 0;

    for col in 0..n {
        if rank == n {
            break;
        }
        let Some(pivot) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);

        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            let factor = std::mem::take(&mut row[col]);
            for j in col + 1..n {
                let v = &pivot_row[col] * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = pivot_row[col].clone();
        rank += 1;
    }
    rank
}
