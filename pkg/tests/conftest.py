import os
import tempfile

# keep test runs away from the user's cache; must happen before any lookup
os.environ.setdefault("QDVOLUMES_CACHE_DIR", tempfile.mkdtemp(prefix="qdv-test-"))

from hypothesis import settings  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")
