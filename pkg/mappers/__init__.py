"""Physical maze mappers: each builds a field in parallel, then traces it."""
