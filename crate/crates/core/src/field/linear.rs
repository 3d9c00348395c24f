/// An F_2-linear map on packed bit vectors of up to 64 bits, evaluated byte-wise.
#[derive(Clone)]
pub struct LinearMap {
    tables: Vec<[u64; 256]>,
}

impl LinearMap {
    /// Builds the map from its action `f`, which must be F_2-linear on inputs of
    /// `input_bits` bits. Only the images of the basis vectors are sampled.
    pub fn from_fn(input_bits: u32, f: impl Fn(u64) -> u64) -> Self {
        assert!(input_bits <= 64);
        let images: Vec<u64> = (0..input_bits).map(|i| f(1u64 << i)).collect();
        let tables = images
            .chunks(8)
            .map(|chunk| {
                let mut t = [0u64; 256];
                for v in 1..256usize {
                    let low = v.trailing_zeros() as usize;
                    t[v] = t[v & (v - 1)] ^ chunk.get(low).copied().unwrap_or(0);
                }
                t
            })
            .collect();
        LinearMap { tables }
    }

    #[inline]
    pub fn apply(&self, x: u64) -> u64 {
        let mut acc = 0;
        for (j, t) in self.tables.iter().enumerate() {
            acc ^= t[((x >> (8 * j)) & 0xff) as usize];
        }
        acc
    }
}
