//! File formats, catalog enumeration, verification suites, and report
//! rendering behind the `csr` binary.

pub mod catalog;
pub mod format;
pub mod report;
pub mod suites;
