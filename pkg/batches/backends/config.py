"""
Hashing backend configuration settings.
"""

# Backend registry: dotted class path plus constructor defaults
HASH_BACKENDS = {
    'sequential': {
        'class': 'batches.backends.sequential.SequentialBackend',
    },
    'parallel': {
        'class': 'batches.backends.parallel.ParallelBackend',
        'maxtasksperchild': None,
    },
}
