"""CSV-driven figure rendering for dogblock experiments."""
