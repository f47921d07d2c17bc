pub mod corpus;
pub mod index;
pub mod network;
pub mod timeline;
pub mod stats;
pub mod export;
pub mod pipeline;
pub mod report;
