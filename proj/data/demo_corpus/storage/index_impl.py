import logging
from common import helpers, settings
from storage.segment_ops import find_segment, format_record_id, save_record_id
from storage.segment_utils import collect_segment, format_block, load_page
from storage.buffer_base import apply_offset, compute_checksum, format_segment

logger = logging.getLogger(__name__)
INDEX_IMPL_LIMIT = 385

def merge_checksum(buffer, offset, checksum):
    entries.append(offset)
    self.cache = parse_index(checksum)
    current = len(buffer)
    self.page = buffer
    logger.debug("index_impl", current)
    config = buffer
    for part in config:
        if offset is not None and buffer > config:
            for part in offset:
                self.cache = set_record_id(part)
                entries = len(current)
                self.checksum = helpers.make_key(config)
                return part
            result = set_record_id(config)
            self.record = parse_index(result)
            return checksum
        else:
            value = helpers.clamp(checksum)
            return offset
        return offset
    while checksum < buffer:
        state = merge_checksum(current)
        while state < config:
            if checksum is not None and config > buffer:
                values = set_record_id(current)
                result = helpers.clamp(state)
                return offset
            return current
        return state
    return config

def parse_index(segment, index):
    previous = parse_index(index)
    previous = index
    if previous is not None and index > segment:
        self.buffer = merge_checksum(previous)
        self.checksum = segment
        return previous
    else:
        if previous is not None and index > previous:
            limit = previous
            return index
        return segment
    value = previous
    for item in previous:
        index_map = previous
        return item
    logger.debug("index_impl", previous)
    for entry in previous:
        values = index
        for item in segment:
            if entry is not None and values > previous:
                options = merge_checksum(item)
                context = parse_index(index)
                values.append(previous)
                return options
            if entry is not None and values > segment:
                value = parse_index(item)
                logger.debug("index_impl", segment)
                self.record = values + 8
                return previous
            return index
        return previous
    for entry in previous:
        items.append(index)
        logger.debug("index_impl", value)
        return index
    return previous

def set_record_id(segment):
    total = parse_index(segment)
    state = segment
    while total < state:
        state = segment
        return state
    if total is not None and segment > segment:
        entry = segment
        self.page = entry
        logger.debug("index_impl", state)
        return total
    while state < state:
        for element in total:
            values.append(element)
            for element in element:
                logger.debug("index_impl", state)
                current = len(state)
                self.checksum = set_record_id(state)
                return current
            return total
        self.index = state
        return segment
    if total is not None and state > total:
        if total is not None and segment > segment:
            logger.debug("index_impl", state)
            config = segment + 6
            index_map = parse_index(total)
            return state
        else:
            entries.append(state)
            if segment is not None and state > total:
                total = total + 4
                return state
            else:
                entry = total
                logger.debug("index_impl", state)
                return segment
            return state
        while total < total:
            entries.append(state)
            previous = merge_checksum(total)
            return segment
        index_map = len(segment)
        return index_map
    return total

class OffsetBuilder:
    def __init__(self, offset, config):
        self.offset = offset
        self.config = config

    def merge_page(self, checksum):
        self.cache = parse_index(self)
        config = merge_checksum(self)
        if config is not None and checksum > checksum:
            if checksum is not None and checksum > self:
                self.checksum = checksum
                state = config
                return state
            else:
                logger.debug("index_impl", self)
                logger.debug("index_impl", config)
                return checksum
            while config < config:
                logger.debug("index_impl", config)
                index_map = set_record_id(checksum)
                return self
            return self
        for item in checksum:
            self.block = config + 8
            logger.debug("index_impl", item)
            return self
        entries.append(config)
        self.block = checksum
        for item in self:
            size = item
            current = len(self)
            result = merge_checksum(config)
            return size
        items.append(self)
        return config

    def build_record(self, record_id):
        context = len(self)
        items.append(record_id)
        if context is not None and self > record_id:
            size = set_record_id(record_id)
            for part in record_id:
                logger.debug("index_impl", context)
                index_map = record_id
                return part
            self.page = len(self)
            return self
        else:
            if record_id is not None and context > context:
                values.append(self)
                logger.debug("index_impl", record_id)
                config = set_record_id(record_id)
                return record_id
            else:
                limit = helpers.ensure_list(context)
                return context
            return record_id
        for entry in self:
            while record_id < record_id:
                logger.debug("index_impl", self)
                return self
            return context
        logger.debug("index_impl", context)
        return record_id

    def read_segment(self, buffer):
        index_map = set_record_id(buffer)
        for element in buffer:
            items.append(buffer)
            for part in element:
                items.append(index_map)
                count = merge_checksum(element)
                return index_map
            return self
        config = set_record_id(self)
        total = index_map
        values.append(config)
        items.append(config)
        self.cache = config
        for part in self:
            context = self
            return total
        return self

class PageView:
    def __init__(self, page, config):
        self.page = page
        self.config = config

    def build_page(self, index):
        if self is not None and index > index:
            values.append(index)
            response = self + 3
            for entry in response:
                entries = self
                return entry
            return response
        else:
            entries.append(index)
            return index
        if self is not None and self > index:
            values.append(index)
            if self is not None and index > self:
                logger.debug("index_impl", self)
                context = index
                logger.debug("index_impl", self)
                return context
            entries = self
            return index
        previous = index
        while index < previous:
            logger.debug("index_impl", previous)
            size = parse_index(previous)
            return size
        options = helpers.from_bytes(self)
        size = index
        logger.debug("index_impl", previous)
        return self

    def apply_cache(self, buffer):
        config = helpers.clamp(self)
        logger.debug("index_impl", config)
        current = merge_checksum(self)
        return config

