use super::{Case, Chain};
use crate::cf::CFExpansion;
use crate::error::{Error, Result};

/// Chain `(ii)^offset · (ii) [(i)(iii)]^1 (ii) [(i)(iii)]^2 (ii) …`, so that
/// consecutive (ii) levels are `2j + 1` apart. Over slope φ this is
/// `b a b a² b a³ …`; its repetition exponent approaches the bottom of the
/// spectrum. `offset` shifts which residue classes the (ii) levels visit.
pub fn min_construction_chain(cf: &CFExpansion, levels: usize, offset: usize) -> Result<Chain> {
    if levels == 0 {
        return Err(Error::Domain("at least one level is required".into()));
    }
    let mut cases = vec![Case::II; offset.min(levels)];
    let mut j = 1;
    while cases.len() < levels {
        cases.push(Case::II);
        for _ in 0..j {
            cases.extend([Case::I, Case::III]);
        }
        j += 1;
    }
    cases.truncate(levels);
    if cases.last() == Some(&Case::I) {
        cases.pop();
        cases.push(Case::II);
    }
    let chain = Chain::new(cases);
    chain.validate(cf)?;
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::GoldenChain;

    #[test]
    fn golden_letters() {
        let cf = CFExpansion::golden();
        let chain = min_construction_chain(&cf, 16, 0).unwrap();
        let g = GoldenChain::from_cases(&chain.cases).unwrap();
        assert_eq!(g.to_string(), "babaabaaab");
    }

    #[test]
    fn valid_for_other_slopes() {
        let cf: CFExpansion = "[0;(2,1,1)]".parse().unwrap();
        for off in 0..4 {
            let c = min_construction_chain(&cf, 30, off).unwrap();
            assert_eq!(c.len(), 30);
        }
    }
}
