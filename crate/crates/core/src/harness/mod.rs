//! Cross-method error analysis: the π catalog, error curves for the segment
//! and sine rules, and their CSV, JSON and text renderings.

mod catalog;
mod report;
mod scan;

pub use catalog::{pi_catalog, sqrt2_catalog, MethodResult, Tradition, MAX_CATALOG_DIGITS};
pub use report::{
    catalog_csv, catalog_json, catalog_table, scan_csv, scan_json, scan_table, sine_scan_csv,
    sine_scan_json, sine_scan_table, text_table,
};
pub use scan::{
    degree_grid, segment_error_scan, sine_error_scan, ScanRow, SegmentFormula, SineScan,
    SineScanRow,
};

/// Report precision when none is given.
pub const DEFAULT_DIGITS: u32 = 15;
