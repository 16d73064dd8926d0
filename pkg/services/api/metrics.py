from prometheus_client import Counter

# Keep labels minimal to avoid cardinality blowups
HTTP_REQUESTS = Counter(
    "trimer_http_requests_total",
    "Total HTTP requests",
    ["method", "path", "status"],
)

EVALUATIONS = Counter(
    "trimer_evaluations_total",
    "Closed-form or oracle evaluations served",
    ["kind"],
)
