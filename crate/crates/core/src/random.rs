//! Seeded random diagrams for cross-checks.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::diagram::Diagram;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly-shaped random diagram with dimension in `1..=max_n`:
/// each row bound is drawn uniformly from the legal range given the row
/// above, including the empty-row option.
pub fn random_diagram<R: Rng>(rng: &mut R, max_n: usize) -> Diagram {
    let n = rng.gen_range(1..=max_n.max(1));
    let mut bounds = vec![n];
    let mut prev = n;
    let mut empty = false;
    for row in 2..=n {
        if empty || prev < row {
            bounds.push(row - 1);
            continue;
        }
        // options: empty, or any bound in row..=prev
        let pick = rng.gen_range(0..=(prev - row + 1));
        if pick == 0 {
            bounds.push(row - 1);
            empty = true;
        } else {
            let c = row + pick - 1;
            bounds.push(c);
            prev = c;
        }
    }
    Diagram::from_bounds(bounds).expect("constructed valid")
}
