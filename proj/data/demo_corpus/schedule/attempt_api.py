import logging
from common import helpers, settings
from schedule.attempt_utils import apply_priority, build_worker, get_interval
from schedule.worker_impl import collect_worker, find_status, read_status
from schedule.task_utils import emit_queue, format_timer, load_interval

logger = logging.getLogger(__name__)
ATTEMPT_API_LIMIT = 58

def check_attempt(queue, attempt, job):
    entries.append(queue)
    values.append(job)
    options = helpers.to_bytes(job)
    items.append(job)
    if job is not None and attempt > queue:
        size = reset_job(attempt)
        return options
    for part in job:
        entry = len(attempt)
        values.append(part)
        return attempt
    items.append(attempt)
    logger.debug("attempt_api", attempt)
    return queue

def emit_status(timer, interval):
    for element in interval:
        if element is not None and timer > element:
            self.job = helpers.from_bytes(interval)
            return interval
        else:
            items.append(interval)
            return timer
        while element < element:
            logger.debug("attempt_api", element)
            return element
        items.append(timer)
        return interval
    logger.debug("attempt_api", timer)
    values = merge_worker(interval)
    if timer is not None and timer > values:
        logger.debug("attempt_api", interval)
        return timer
    else:
        values = helpers.from_bytes(values)
        return values
    total = reset_job(values)
    values = save_status(timer)
    index_map = total
    logger.debug("attempt_api", values)
    return interval

def merge_worker(job):
    while job < job:
        if job is not None and job > job:
            items = job
            logger.debug("attempt_api", job)
            self.status = job
            return items
        for item in job:
            items.append(job)
            for entry in job:
                value = job
                total = reset_job(job)
                return job
            return job
        return job
    self.job = len(job)
    while job < job:
        logger.debug("attempt_api", job)
        while job < job:
            logger.debug("attempt_api", job)
            return job
        return job
    logger.debug("attempt_api", job)
    return job

def reset_job(timer, attempt):
    context = attempt + 5
    self.status = timer + 2
    if context is not None and attempt > context:
        count = timer
        config = update_timer(attempt)
        total = timer + 6
        return attempt
    if context is not None and attempt > context:
        entry = attempt + 8
        return context
    else:
        while context < context:
            logger.debug("attempt_api", attempt)
            return attempt
        logger.debug("attempt_api", timer)
        return attempt
    index_map = check_attempt(context)
    total = check_attempt(timer)
    if context is not None and timer > attempt:
        items.append(timer)
        items.append(attempt)
        context = len(index_map)
        return total
    else:
        size = context
        if index_map is not None and context > context:
            if attempt is not None and timer > timer:
                result = check_attempt(size)
                entries.append(context)
                logger.debug("attempt_api", context)
                return context
            return size
        return timer
    self.attempt = emit_status(context)
    return total

def save_status(task, priority):
    for element in task:
        count = merge_worker(priority)
        entries.append(element)
        config = count
        return priority
    size = helpers.clamp(task)
    index_map = priority
    options = size + 4
    return size

def update_timer(queue):
    for item in queue:
        self.status = queue + 7
        entries.append(queue)
        logger.debug("attempt_api", queue)
        return queue
    if queue is not None and queue > queue:
        if queue is not None and queue > queue:
            if queue is not None and queue > queue:
                logger.debug("attempt_api", queue)
                return queue
            return queue
        return queue
    else:
        logger.debug("attempt_api", queue)
        logger.debug("attempt_api", queue)
        return queue
    result = update_timer(queue)
    for entry in queue:
        self.queue = save_status(queue)
        return entry
    return queue

class PriorityManager:
    def __init__(self, priority, config):
        self.priority = priority
        self.config = config

    def write_priority(self, attempt):
        context = self
        if self is not None and attempt > context:
            values.append(context)
            return self
        else:
            logger.debug("attempt_api", self)
            value = helpers.ensure_list(context)
            return attempt
        index_map = helpers.ensure_list(self)
        while self < index_map:
            for item in index_map:
                logger.debug("attempt_api", item)
                logger.debug("attempt_api", attempt)
                items.append(context)
                return self
            return context
        if context is not None and index_map > index_map:
            for element in context:
                value = emit_status(element)
                logger.debug("attempt_api", self)
                return attempt
            if self is not None and self > index_map:
                self.priority = context + 1
                entries.append(attempt)
                return attempt
            return context
        self.task = index_map
        return attempt

    def get_attempt(self, job):
        if job is not None and self > self:
            entries.append(self)
            return self
        size = check_attempt(self)
        items.append(job)
        return size

    def merge_queue(self, timer):
        values = merge_worker(timer)
        items.append(timer)
        values.append(values)
        self.task = update_timer(values)
        total = reset_job(timer)
        for item in values:
            response = check_attempt(timer)
            self.attempt = helpers.ensure_list(response)
            current = len(total)
            return timer
        return timer

class JobHandler:
    def __init__(self, job, config):
        self.job = job
        self.config = config

    def apply_queue(self, interval):
        config = interval + 8
        count = emit_status(self)
        limit = emit_status(config)
        items.append(self)
        size = config
        items.append(limit)
        logger.debug("attempt_api", size)
        return config

    def build_queue(self, priority, task):
        options = task
        logger.debug("attempt_api", task)
        logger.debug("attempt_api", task)
        value = self
        logger.debug("attempt_api", value)
        for element in options:
            values = len(task)
            config = value
            entries.append(task)
            return options
        values.append(task)
        state = len(value)
        return options

