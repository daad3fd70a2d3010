use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::function::Shape;
use crate::neighborhood::parents;

/// Maximal ascending chain from `inf` to `sup`, choosing uniformly among
/// the parents at each step.
pub fn random_path(p: usize, seed: u64) -> Result<Vec<Shape>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = Shape::inf(p)?;
    let mut path = vec![current.clone()];
    loop {
        let ups = parents(&current);
        let Some(step) = ups.choose(&mut rng) else {
            break;
        };
        current = step.target.clone();
        path.push(current.clone());
    }
    Ok(path)
}
