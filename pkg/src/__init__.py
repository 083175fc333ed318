# Research Data Aggregation Service 