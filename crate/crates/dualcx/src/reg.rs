use serde::Serialize;

use crate::{DualComplex, DualError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegReport {
    pub n: usize,
    pub reg: i64,
    pub coreg: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level: Option<u32>,
    pub cells: Vec<usize>,
    pub euler: i64,
    pub connected: bool,
    /// Only ever "consistent with": no homeomorphism is checked.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub topology: Option<String>,
}

pub fn regularity(dc: &DualComplex, n: usize, level: Option<u32>) -> RegReport {
    let reg = dc.dimension();
    let euler = dc.euler();
    let connected = dc.is_connected();
    let topology = match (reg, euler, connected) {
        (1, 0, true) => Some("consistent with a circle (χ = 0)".to_string()),
        (2, 2, true) => Some("consistent with a sphere (χ = 2)".to_string()),
        (0, 1, true) => Some("a point".to_string()),
        _ => None,
    };
    RegReport { n, reg, coreg: n as i64 - 1 - reg, level, cells: dc.cell_counts(), euler, connected, topology }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CoregVerdict {
    CoregZero,
    CoregAtLeastOne,
}

/// For a smooth Fano of dimension `n`: coregularity 0 iff some 1- or
/// 2-complement has a full-dimensional dual complex.
pub fn coreg_verdict(reg1: i64, reg2: i64, n: usize) -> Result<CoregVerdict, DualError> {
    let max = n as i64 - 1;
    for reg in [reg1, reg2] {
        if !(-1..=max).contains(&reg) {
            return Err(DualError::RegOutOfRange { reg, max });
        }
    }
    Ok(if reg1 == max || reg2 == max { CoregVerdict::CoregZero } else { CoregVerdict::CoregAtLeastOne })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{SncConfig, Stratum};

    #[test]
    fn reports() {
        let dc = DualComplex::build(&SncConfig::general_position(3, 4)).unwrap();
        let r = regularity(&dc, 3, Some(1));
        assert_eq!((r.reg, r.coreg), (2, 0));
        assert!(r.topology.unwrap().contains("sphere"));

        let point = SncConfig { ambient_dim: 3, components: vec!["S".into()], strata: vec![Stratum::new(&[0], 1)] };
        let r = regularity(&DualComplex::build(&point).unwrap(), 3, Some(1));
        assert_eq!((r.reg, r.coreg), (0, 2));

        let r = regularity(&DualComplex::empty(), 2, None);
        assert_eq!((r.reg, r.coreg), (-1, 2));
    }

    #[test]
    fn verdicts() {
        assert_eq!(coreg_verdict(0, 0, 3), Ok(CoregVerdict::CoregAtLeastOne));
        for r2 in -1..=2 {
            assert_eq!(coreg_verdict(2, r2, 3), Ok(CoregVerdict::CoregZero));
        }
        assert_eq!(coreg_verdict(-1, 2, 3), Ok(CoregVerdict::CoregZero));
        assert_eq!(coreg_verdict(3, 0, 3), Err(DualError::RegOutOfRange { reg: 3, max: 2 }));
        assert!(coreg_verdict(0, -2, 3).is_err());
    }
}
