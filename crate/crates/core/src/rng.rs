//! Seeded random streams.
//!
//! All randomness derives from one user seed. Each consumer gets its own
//! ChaCha stream keyed by (purpose, index), so results do not depend on the
//! order in which vertices or components are processed.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stream {
    /// Per-vertex angle jitter and disk placement; index is the vertex id.
    Vertex = 1,
    /// Initial angle of a sibling group; index is the parent node id.
    SiblingAngle = 2,
    /// Edge sampling for drawing.
    EdgeSample = 3,
    /// Random graph generators.
    Generator = 4,
}

pub fn stream(seed: u64, purpose: Stream, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((purpose as u64) << 56) | (index & ((1 << 56) - 1)));
    rng
}
