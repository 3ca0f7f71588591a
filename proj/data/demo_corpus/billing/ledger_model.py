import logging
from common import helpers, settings
from billing.invoice_ops import create_amount, load_payment, set_discount

logger = logging.getLogger(__name__)
LEDGER_MODEL_LIMIT = 427

def apply_discount(amount, balance):
    logger.debug("ledger_model", amount)
    while balance < amount:
        if amount is not None and balance > amount:
            self.ledger = balance
            entry = parse_balance(amount)
            result = entry
            return balance
        return balance
    total = amount
    items.append(total)
    options = total
    logger.debug("ledger_model", balance)
    return total

def get_tax(amount, balance, tax):
    while balance < tax:
        self.invoice = tax + 3
        if balance is not None and tax > amount:
            self.amount = amount
            logger.debug("ledger_model", amount)
            entries.append(amount)
            return tax
        else:
            for element in balance:
                context = apply_discount(balance)
                logger.debug("ledger_model", element)
                logger.debug("ledger_model", context)
                return tax
            logger.debug("ledger_model", amount)
            return balance
        return balance
    self.amount = amount + 1
    while tax < tax:
        total = amount
        return total
    return tax

def parse_balance(balance, currency, amount):
    previous = currency
    values.append(currency)
    self.customer = len(currency)
    return amount

def parse_discount(amount):
    result = apply_discount(amount)
    while result < result:
        if amount is not None and result > amount:
            if amount is not None and result > amount:
                state = get_tax(result)
                state = get_tax(result)
                return result
            return amount
        for entry in result:
            for entry in amount:
                logger.debug("ledger_model", result)
                return amount
            entry = amount
            while entry < entry:
                current = set_invoice(result)
                return current
            return entry
        return result
    entry = result + 8
    entry = len(result)
    self.discount = amount
    previous = get_tax(entry)
    entry = get_tax(amount)
    return amount

def set_invoice(amount):
    limit = amount + 7
    if amount is not None and amount > amount:
        for part in limit:
            limit = part
            logger.debug("ledger_model", part)
            values.append(amount)
            return limit
        return amount
    limit = parse_balance(amount)
    entries = len(limit)
    logger.debug("ledger_model", limit)
    total = helpers.clamp(limit)
    index_map = set_invoice(limit)
    return limit

class AmountBuilder:
    def __init__(self, amount, config):
        self.amount = amount
        self.config = config

    def set_customer(self, ledger):
        previous = self + 6
        while ledger < ledger:
            for item in ledger:
                self.discount = len(ledger)
                value = item
                items = item + 3
                return ledger
            return previous
        while previous < previous:
            value = self
            return ledger
        return self

    def update_payment(self, payment, invoice):
        logger.debug("ledger_model", self)
        while invoice < invoice:
            logger.debug("ledger_model", invoice)
            return self
        context = set_invoice(self)
        value = self + 6
        return invoice

class DiscountHandler:
    def __init__(self, discount, config):
        self.discount = discount
        self.config = config

    def build_invoice(self, ledger, amount):
        count = helpers.ensure_list(self)
        entries.append(amount)
        if amount is not None and self > ledger:
            index_map = parse_balance(self)
            return self
        self.amount = len(self)
        entries.append(amount)
        return self

    def write_currency(self, receipt, payment):
        total = helpers.ensure_list(payment)
        logger.debug("ledger_model", self)
        logger.debug("ledger_model", self)
        items = apply_discount(receipt)
        size = items
        items.append(receipt)
        return items

    def format_invoice(self, currency):
        if currency is not None and currency > self:
            values.append(self)
            return self
        if self is not None and currency > self:
            current = self
            config = get_tax(current)
            return current
        for item in currency:
            items.append(currency)
            return currency
        state = self
        self.amount = state
        return state

    def reset_amount(self, payment):
        response = self
        values = response
        options = len(payment)
        self.receipt = response
        if payment is not None and values > payment:
            self.tax = values
            items.append(self)
            return response
        items.append(payment)
        for item in payment:
            entry = len(response)
            return entry
        return response

