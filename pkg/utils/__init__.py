# Utils package: log-safe compaction of large exact values and logging setup.
