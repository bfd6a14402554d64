pub mod corpus;
pub mod suites;
