use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cf::CFExpansion;
use crate::chain::{Case, Chain, GoldenChain, Letter};
use crate::error::Result;

/// Independent generator for subject `index` of a seeded campaign.
pub fn subject_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// I.i.d. letters with P(a) = P(b) = 1/2, enough to cover `levels`.
pub fn random_golden_chain(rng: &mut impl Rng, levels: usize, leading_iii: bool) -> GoldenChain {
    let prefix = (0..levels)
        .map(|_| if rng.gen_bool(0.5) { Letter::A } else { Letter::B })
        .collect();
    GoldenChain {
        leading_iii,
        prefix,
        period: Vec::new(),
    }
}

/// Uniformly chosen valid annotated chain for `cf`.
pub fn random_chain(cf: &CFExpansion, levels: usize, rng: &mut impl Rng) -> Result<Chain> {
    let a = cf.quotient_vec(levels + 1)?;
    let pick = |rng: &mut dyn rand::RngCore, opts: &[Case]| opts[rng.gen_range(0..opts.len())];
    let mut cases = vec![pick(rng, &[Case::I, Case::II, Case::III])];
    let mut t = BTreeMap::new();
    for k in 1..levels {
        let prev = cases[k - 1];
        let next = match prev {
            Case::I if a[k + 1] >= 2 => pick(rng, &[Case::I, Case::II, Case::III]),
            Case::I => Case::III,
            _ => pick(rng, &[Case::I, Case::II]),
        };
        if prev == Case::I && next != Case::III {
            t.insert(k, rng.gen_range(1..a[k + 1]));
        }
        cases.push(next);
    }
    let w1 = if cases[0] == Case::III {
        1
    } else {
        rng.gen_range(1..=a[1])
    };
    let chain = Chain { cases, t, w1 };
    chain.validate(cf)?;
    Ok(chain)
}

/// Eventually periodic slope with quotients in 1..=max_quotient whose q_{levels}
/// stays within `budget`.
pub fn random_slope(rng: &mut impl Rng, max_quotient: u64, levels: usize, budget: u64) -> Result<CFExpansion> {
    loop {
        let pre: Vec<u64> = (0..rng.gen_range(0..=2))
            .map(|_| rng.gen_range(1..=max_quotient))
            .collect();
        let period: Vec<u64> = (0..rng.gen_range(1..=3))
            .map(|_| rng.gen_range(1..=max_quotient))
            .collect();
        let cf = CFExpansion::periodic(0, pre, period)?;
        let q = cf.denominators(levels)?;
        if q[levels] <= budget.into() {
            return Ok(cf);
        }
    }
}
