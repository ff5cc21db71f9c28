"""Configuration module for partition_gsemo."""
