__all__ = ["documents", "job_service"]
