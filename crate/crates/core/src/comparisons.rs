//! Derived constructions against the classical oracle. Only π₀ presentations
//! cross over to the oracle side.

use crate::blowup::blowup_charts;
use crate::center::CenterPresentation;
use crate::classical::{compare_chart_pi0, compare_deformation_pi0, ChartComparison, DeformationComparison};
use crate::rees::rees_extended;
use crate::Error;

pub fn compare_classical_deformation(center: &CenterPresentation) -> Result<DeformationComparison, Error> {
    if center.is_empty() {
        return Err(Error::EmptyCenter);
    }
    compare_deformation_pi0(center, &rees_extended(center).pi0())
}

pub fn compare_classical_blowup(center: &CenterPresentation) -> Result<Vec<ChartComparison>, Error> {
    if center.is_empty() {
        return Err(Error::EmptyCenter);
    }
    blowup_charts(center)?
        .iter()
        .map(|c| compare_chart_pi0(center, c.index, &c.cdga.pi0()))
        .collect()
}
