"""HTTP surface: pydantic schemas and the FastAPI application."""
