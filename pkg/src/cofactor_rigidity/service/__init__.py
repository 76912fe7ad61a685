"""HTTP service wrapping the library; see app.py for the endpoints."""
