//! Dense linear algebra over an exact field.

use crate::field::Field;

/// Rank of a dense matrix given by rows.
pub(crate) fn rank<F: Field>(field: &F, mut rows: Vec<Vec<F::Elem>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = field.inv(&rows[rank][col]).expect("pivot is nonzero");
        let pivot_row: Vec<F::Elem> = rows[rank].iter().map(|c| field.mul(c, &inv)).collect();
        for r in rows.iter_mut().skip(rank + 1) {
            if field.is_zero(&r[col]) {
                continue;
            }
            let f = r[col].clone();
            for (x, p) in r.iter_mut().zip(&pivot_row).skip(col) {
                *x = field.sub(x, &field.mul(&f, p));
            }
        }
        rank += 1;
    }
    rank
}
