"""End-to-end tests for the coordsolve command line."""
