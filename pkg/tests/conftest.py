from hypothesis import settings

# keep property sweeps reproducible across runs
settings.register_profile("deterministic", derandomize=True, deadline=None)
settings.load_profile("deterministic")
