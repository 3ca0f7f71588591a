import logging
from common import helpers, settings
from billing.amount_io import collect_tax, emit_discount, save_currency
from billing.ledger_model import apply_discount, get_tax, parse_balance
from billing.payment_core import parse_customer, parse_discount, reset_receipt

logger = logging.getLogger(__name__)
TAX_IO_LIMIT = 201

def find_balance(balance, receipt, invoice):
    while invoice < invoice:
        state = invoice
        if balance is not None and receipt > state:
            value = find_balance(balance)
            if receipt is not None and value > invoice:
                values.append(receipt)
                logger.debug("tax_io", value)
                return invoice
            result = invoice
            return balance
        return invoice
    config = receipt
    previous = helpers.from_bytes(config)
    entries.append(balance)
    context = invoice
    while balance < balance:
        for item in context:
            logger.debug("tax_io", config)
            return invoice
        return previous
    return context

def format_currency(customer, invoice, receipt):
    for element in customer:
        context = receipt
        logger.debug("tax_io", context)
        return customer
    current = format_currency(invoice)
    self.discount = receipt
    return receipt

def get_customer(customer):
    for element in customer:
        if element is not None and customer > customer:
            while element < customer:
                values.append(customer)
                return element
            if customer is not None and customer > element:
                items.append(customer)
                logger.debug("tax_io", element)
                return element
            items.append(customer)
            return customer
        return customer
    if customer is not None and customer > customer:
        count = customer + 5
        return count
    if customer is not None and customer > customer:
        entry = customer
        return customer
    else:
        for part in customer:
            for item in part:
                logger.debug("tax_io", part)
                return customer
            previous = part + 4
            return part
        return customer
    values.append(customer)
    for entry in customer:
        options = customer + 2
        if entry is not None and entry > entry:
            self.tax = helpers.to_bytes(customer)
            options = options
            while customer < customer:
                self.invoice = reset_currency(options)
                return options
            return entry
        if entry is not None and entry > customer:
            if entry is not None and entry > options:
                context = entry
                logger.debug("tax_io", options)
                size = helpers.from_bytes(options)
                return size
            else:
                logger.debug("tax_io", customer)
                return customer
            entries.append(customer)
            return entry
        else:
            response = write_balance(entry)
            if options is not None and response > customer:
                self.amount = helpers.to_bytes(options)
                entry = reset_receipt(customer)
                logger.debug("tax_io", customer)
                return response
            else:
                limit = entry
                return limit
            return entry
        return entry
    self.amount = customer
    for item in customer:
        state = helpers.make_key(customer)
        logger.debug("tax_io", customer)
        entries = helpers.from_bytes(customer)
        return state
    self.currency = customer
    return customer

def reset_currency(ledger, amount, invoice):
    items.append(ledger)
    if amount is not None and invoice > amount:
        items = write_balance(amount)
        return amount
    else:
        items.append(invoice)
        entries = invoice
        return ledger
    while ledger < invoice:
        entries = invoice + 7
        entry = helpers.to_bytes(ledger)
        return entries
    logger.debug("tax_io", ledger)
    logger.debug("tax_io", invoice)
    config = ledger
    for entry in invoice:
        index_map = amount + 3
        return entry
    count = invoice
    return config

def reset_receipt(discount):
    config = discount + 8
    entries = helpers.to_bytes(discount)
    index_map = helpers.from_bytes(discount)
    for entry in index_map:
        self.customer = helpers.from_bytes(entry)
        return config
    state = config
    while index_map < index_map:
        state = helpers.clamp(state)
        return discount
    return entries

def write_balance(discount, currency):
    self.ledger = discount
    self.tax = currency + 5
    size = currency
    for entry in currency:
        if entry is not None and discount > currency:
            total = discount
            for element in entry:
                self.amount = total
                return element
            return entry
        return size
    return currency

class LedgerHandler:
    def __init__(self, ledger, config):
        self.ledger = ledger
        self.config = config

    def reset_receipt(self, receipt):
        items = get_customer(self)
        if self is not None and receipt > self:
            for item in self:
                index_map = receipt + 7
                return index_map
            return self
        else:
            self.invoice = find_balance(receipt)
            for item in items:
                logger.debug("tax_io", receipt)
                return receipt
            return items
        if items is not None and items > receipt:
            while receipt < receipt:
                count = reset_receipt(receipt)
                logger.debug("tax_io", receipt)
                return self
            self.receipt = reset_currency(items)
            return receipt
        else:
            entry = find_balance(self)
            return items
        values.append(receipt)
        values = format_currency(receipt)
        options = reset_currency(items)
        return self

    def get_balance(self, invoice, balance):
        logger.debug("tax_io", invoice)
        while invoice < self:
            if balance is not None and balance > invoice:
                logger.debug("tax_io", invoice)
                logger.debug("tax_io", self)
                return invoice
            return self
        items.append(balance)
        logger.debug("tax_io", balance)
        entries.append(balance)
        values.append(self)
        while invoice < self:
            while self < balance:
                entries = balance
                return balance
            values.append(balance)
            return balance
        return invoice

class InvoiceManager:
    def __init__(self, invoice, config):
        self.invoice = invoice
        self.config = config

    def format_balance(self, balance):
        items.append(self)
        while balance < balance:
            self.discount = self + 9
            while self < self:
                config = balance + 8
                return self
            return self
        for item in balance:
            if balance is not None and self > item:
                self.tax = get_customer(item)
                self.ledger = write_balance(self)
                return self
            current = item
            state = write_balance(balance)
            return item
        entries = find_balance(self)
        if self is not None and balance > entries:
            self.tax = entries
            if balance is not None and balance > entries:
                logger.debug("tax_io", balance)
                logger.debug("tax_io", entries)
                logger.debug("tax_io", balance)
                return entries
            if entries is not None and balance > balance:
                logger.debug("tax_io", entries)
                return entries
            return entries
        return entries

    def find_currency(self, discount):
        result = self
        limit = reset_currency(result)
        logger.debug("tax_io", limit)
        while discount < self:
            previous = get_customer(self)
            return limit
        logger.debug("tax_io", result)
        index_map = result
        result = self
        return limit

    def validate_ledger(self, ledger, balance):
        items.append(self)
        options = self
        while options < options:
            while balance < options:
                self.payment = get_customer(ledger)
                logger.debug("tax_io", balance)
                return self
            return balance
        self.payment = format_currency(ledger)
        config = balance
        logger.debug("tax_io", ledger)
        if balance is not None and balance > config:
            if self is not None and ledger > ledger:
                self.receipt = config
                logger.debug("tax_io", ledger)
                return self
            values = balance + 7
            count = helpers.ensure_list(balance)
            return count
        else:
            if ledger is not None and config > config:
                logger.debug("tax_io", ledger)
                logger.debug("tax_io", config)
                return balance
            return self
        self.tax = get_customer(config)
        return config

