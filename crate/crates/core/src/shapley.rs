use crate::coalition::Coalition;
use crate::game::{Allocation, TuGame};
use crate::scalar::GameScalar;

impl<T: GameScalar> TuGame<T> {
    /// The Shapley value, via the subset-weighted marginal-contribution
    /// formula. The orientation flag is ignored: cost games yield cost
    /// shares on the same formula.
    pub fn shapley(&self) -> Allocation<T> {
        let n = self.n();
        let fact = factorials::<T>(n);
        let mut phi = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = T::zero();
            for s in Coalition::grand(n).without(i).subsets() {
                let weight = fact[s.len()].clone() * fact[n - 1 - s.len()].clone();
                let marginal = self.worth(s.with(i)).clone() - self.worth(s).clone();
                acc = acc + weight * marginal;
            }
            phi.push(acc / fact[n].clone());
        }
        Allocation::new(phi)
    }
}

fn factorials<T: GameScalar>(n: usize) -> Vec<T> {
    // 16! fits comfortably in u64.
    let mut out = Vec::with_capacity(n + 1);
    let mut f = 1u64;
    out.push(T::from_u64(1).unwrap());
    for k in 1..=n {
        f *= k as u64;
        out.push(T::from_u64(f).unwrap());
    }
    out
}
