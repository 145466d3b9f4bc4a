pub mod oracle;
pub mod fixtures;
