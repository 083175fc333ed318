# Tests for Research Data Aggregation Service 