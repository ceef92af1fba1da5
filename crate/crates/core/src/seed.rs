//! Counter-based seed derivation. A stream is named by the path of
//! counters leading to it (iteration, component, ...), never by the order
//! in which work happens to be scheduled.

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn derive(master: u64, path: &[u64]) -> u64 {
    path.iter().fold(mix(master.wrapping_add(GOLDEN)), |acc, &c| {
        mix(acc ^ mix(c.wrapping_add(GOLDEN).wrapping_mul(GOLDEN)))
    })
}
