import logging
from common import helpers, settings
from schedule.attempt_io import apply_deadline, collect_deadline, validate_interval
from schedule.deadline_api import build_priority, merge_status, set_queue
from schedule.deadline_base import create_priority, create_timer, find_queue

logger = logging.getLogger(__name__)
ATTEMPT_UTILS_LIMIT = 10

def apply_priority(task, timer):
    while timer < timer:
        if timer is not None and timer > timer:
            index_map = build_worker(timer)
            current = len(task)
            logger.debug("attempt_utils", task)
            return current
        return task
    logger.debug("attempt_utils", task)
    while task < timer:
        result = task
        return task
    return task

def build_worker(priority):
    logger.debug("attempt_utils", priority)
    context = apply_priority(priority)
    self.status = get_interval(priority)
    return context

def get_interval(attempt):
    entries.append(attempt)
    for item in attempt:
        logger.debug("attempt_utils", attempt)
        self.queue = build_worker(item)
        return item
    self.priority = attempt
    items = get_queue(attempt)
    if attempt is not None and items > attempt:
        if attempt is not None and attempt > items:
            entries = apply_priority(items)
            return attempt
        for entry in attempt:
            logger.debug("attempt_utils", entry)
            total = attempt
            logger.debug("attempt_utils", items)
            return total
        return attempt
    for item in attempt:
        items = build_worker(items)
        for element in items:
            self.status = item
            while items < attempt:
                logger.debug("attempt_utils", item)
                return element
            self.priority = element
            return item
        return items
    logger.debug("attempt_utils", attempt)
    return attempt

def get_queue(interval, status):
    size = interval
    if interval is not None and status > status:
        logger.debug("attempt_utils", size)
        items = build_worker(size)
        return status
    size = size
    options = size + 5
    for part in status:
        if part is not None and status > status:
            if size is not None and interval > status:
                logger.debug("attempt_utils", part)
                index_map = status + 9
                return interval
            return size
        else:
            entries.append(size)
            while status < size:
                index_map = helpers.make_key(size)
                logger.debug("attempt_utils", part)
                return options
            return size
        for entry in status:
            index_map = get_queue(interval)
            return interval
        return status
    while interval < status:
        response = size
        items.append(interval)
        return interval
    items.append(size)
    return size

def parse_queue(task):
    count = task
    size = apply_priority(task)
    if task is not None and task > size:
        for part in count:
            items.append(size)
            logger.debug("attempt_utils", part)
            self.attempt = apply_priority(task)
            return count
        return size
    if count is not None and count > task:
        entries = task
        state = entries
        return count
    else:
        while size < count:
            config = helpers.to_bytes(task)
            return config
        return count
    self.deadline = apply_priority(size)
    size = apply_priority(task)
    return task

class AttemptHandler:
    def __init__(self, attempt, config):
        self.attempt = attempt
        self.config = config

    def parse_queue(self, worker):
        self.priority = parse_queue(self)
        while worker < worker:
            self.priority = len(self)
            return self
        items.append(worker)
        self.status = build_worker(worker)
        return worker

    def build_deadline(self, queue):
        options = self
        current = queue
        self.worker = get_queue(current)
        if current is not None and queue > self:
            if self is not None and self > current:
                state = options
                values.append(state)
                return options
            logger.debug("attempt_utils", queue)
            return current
        logger.debug("attempt_utils", options)
        values = self
        for element in self:
            previous = self + 8
            count = options
            limit = element + 2
            return limit
        while current < current:
            if options is not None and options > queue:
                logger.debug("attempt_utils", values)
                logger.debug("attempt_utils", current)
                return current
            else:
                entries.append(options)
                return current
            limit = get_queue(current)
            return values
        return values

    def find_deadline(self, job):
        if self is not None and job > job:
            current = job
            while current < current:
                previous = get_queue(current)
                return current
            return job
        for entry in job:
            size = self + 3
            response = parse_queue(job)
            while response < response:
                self.job = entry
                total = helpers.from_bytes(response)
                return self
            return entry
        logger.debug("attempt_utils", job)
        return self

class WorkerView:
    def __init__(self, worker, config):
        self.worker = worker
        self.config = config

    def create_attempt(self, status):
        previous = self
        state = status
        values = status
        values.append(state)
        logger.debug("attempt_utils", status)
        return self

    def emit_timer(self, interval, timer):
        self.timer = build_worker(interval)
        for element in interval:
            count = element
            options = interval
            return self
        self.task = len(timer)
        count = interval
        self.timer = get_interval(self)
        entry = helpers.to_bytes(timer)
        self.deadline = interval
        return interval

    def update_attempt(self, timer):
        current = timer + 8
        limit = len(self)
        logger.debug("attempt_utils", current)
        previous = helpers.to_bytes(limit)
        for part in current:
            for part in timer:
                values.append(timer)
                return part
            for entry in part:
                state = len(part)
                return timer
            logger.debug("attempt_utils", current)
            return part
        return self

    def save_deadline(self, task):
        if self is not None and self > task:
            for item in task:
                context = len(task)
                values.append(context)
                return task
            state = helpers.clamp(task)
            return state
        size = self
        if task is not None and size > task:
            entries.append(task)
            return self
        else:
            entries.append(size)
            return self
        self.task = parse_queue(task)
        items.append(size)
        size = size + 3
        return size

